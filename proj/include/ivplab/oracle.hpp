#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ivplab/bigint.hpp"
#include "ivplab/element.hpp"
#include "ivplab/engine.hpp"
#include "ivplab/poly.hpp"

namespace ivplab {

// Brute-force ground truth. Shares nothing with the engine beyond polynomial
// arithmetic: fixed divisors come from value sampling, atoms from an
// unrestricted search over all splits and all admissible rational constants.

struct OracleConfig {
  unsigned sample_radius = 10;  // must be >= the degree of what is sampled
  unsigned max_parts = 24;      // cap on the number of basis factors in e^n
  std::uint64_t max_nodes = 50'000'000;
};

/// denom | num(a) for every a in [-radius, radius].
bool sampled_integer_valuedness(const IntPoly& num, const BigInt& denom, const OracleConfig& cfg);

/// gcd of num(a) over a in [-radius, radius].
BigInt sampled_fixed_divisor(const IntPoly& num, const OracleConfig& cfg);

/// A factorization as a sorted multiset of (exponent vector, denominator).
using EssentialClass = std::vector<std::pair<ExponentVector, BigInt>>;

struct OracleResult {
  std::vector<EssentialClass> classes;  // sorted
  std::uint64_t ordered_tuples = 0;     // factorizations before grouping
  std::uint64_t nodes = 0;
  std::size_t count() const { return classes.size(); }
};

/// Enumerates ordered tuples of irreducible factors of e^n and groups them
/// into essential classes. Requires e integer-valued with sampled fixed
/// divisor equal to its denominator. Throws BudgetExceeded past the caps.
OracleResult brute_force_factorizations(const IvpElement& e, unsigned n, const OracleConfig& cfg = {});

/// The engine's report in the oracle's class representation.
std::vector<EssentialClass> classes_of(const FactorizationReport& report);

}  // namespace ivplab
