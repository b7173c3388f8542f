#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ivplab/bigint.hpp"
#include "ivplab/poly.hpp"

namespace ivplab {

/// A p-adic valuation: a non-negative integer, or infinity (valuation of 0).
class Valuation {
 public:
  constexpr Valuation() = default;
  constexpr explicit Valuation(unsigned long value) : value_(value) {}
  static constexpr Valuation infinity() {
    Valuation v;
    v.value_.reset();
    return v;
  }

  constexpr bool is_infinite() const { return !value_.has_value(); }
  /// Throws std::logic_error when infinite.
  unsigned long value() const;

  friend constexpr bool operator==(const Valuation&, const Valuation&) = default;
  friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite())
      return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    return *a.value_ <=> *b.value_;
  }
  friend Valuation operator+(const Valuation& a, const Valuation& b);

 private:
  std::optional<unsigned long> value_{0};
};

std::string to_string(const Valuation& v);

/// Deterministic primality for 64-bit candidates; larger inputs throw
/// std::invalid_argument.
bool is_prime(const BigInt& n);
bool is_prime_u64(std::uint64_t n);

/// All primes <= bound, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);
/// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

/// Largest k with p^k | n; infinity for n = 0. Rejects non-prime p.
Valuation vp(const BigInt& n, const BigInt& p);

/// Positive generator of the ideal generated by f(a), a in Z; 0 for f = 0.
/// Computed as gcd(f(0), ..., f(deg f)).
BigInt fixed_divisor(const IntPoly& f);

/// v_p of the fixed divisor, i.e. min over a of v_p(f(a)). Requires f != 0.
Valuation vp_fixed_divisor(const IntPoly& f, const BigInt& p);

/// Prime support of fixed_divisor(f), ascending. Requires f != 0.
std::vector<BigInt> primes_dividing_fixed_divisor(const IntPoly& f);

/// Prime factorization of |n| (n != 0) by trial division plus a primality
/// check of the cofactor. Throws std::invalid_argument if a cofactor beyond
/// 64 bits remains.
std::vector<std::pair<BigInt, unsigned>> factor_small(const BigInt& n);

bool is_square_free(const BigInt& n);

}  // namespace ivplab
