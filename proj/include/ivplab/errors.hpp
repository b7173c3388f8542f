#pragma once

#include <stdexcept>
#include <string>

namespace ivplab {

// Bad parameters or malformed input use std::invalid_argument.

// A mathematical check on supplied data failed (e.g. a tampered witness).
class CheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant that holds by construction was violated.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Enumeration exceeded its configured budget; reports are never truncated.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ivplab
