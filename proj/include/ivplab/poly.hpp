#pragma once

#include <compare>
#include <string>
#include <vector>

#include "ivplab/bigint.hpp"

namespace ivplab {

/// Dense univariate polynomial over the integers, coefficients in ascending
/// degree order. The zero polynomial has no stored coefficients; otherwise
/// the last stored coefficient is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, unsigned degree);
  /// x - root
  static IntPoly linear_root(const BigInt& root);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i; zero beyond the degree.
  BigInt coeff(std::size_t i) const;
  const BigInt& leading() const;
  bool is_monic() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  /// Total order: by degree, then coefficients from the constant term up.
  friend std::strong_ordering operator<=>(const IntPoly& a, const IntPoly& b);

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly pow(const IntPoly& a, unsigned k);
BigInt eval(const IntPoly& f, const BigInt& a);

/// Positive gcd of the coefficients. Throws std::invalid_argument on zero.
BigInt content(const IntPoly& f);

/// Human-readable form, highest degree first, e.g. "x^2 - 2*x + 1".
std::string to_string(const IntPoly& f);

}  // namespace ivplab
