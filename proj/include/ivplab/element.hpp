#pragma once

#include <vector>

#include "ivplab/bigint.hpp"
#include "ivplab/poly.hpp"

namespace ivplab {

/// Multiplicities of the basis polynomials inside a numerator product.
using ExponentVector = std::vector<unsigned>;

/// sign * prod(basis[i]^expo[i]) / denom, with monic non-constant basis
/// polynomials. Membership in Int(Z) (denom | fixed divisor of the
/// numerator) is checked separately so that non-members can be reported.
struct IvpElement {
  std::vector<IntPoly> basis;
  ExponentVector expo;
  BigInt denom = 1;
  int sign = 1;

  friend bool operator==(const IvpElement&, const IvpElement&) = default;
};

/// Throws std::invalid_argument on structural problems: mismatched sizes,
/// non-monic or constant basis entries, denom < 1, sign not +-1.
void validate_shape(const IvpElement& e);

IntPoly numerator(const IvpElement& e);
unsigned total_degree(const std::vector<IntPoly>& basis, const ExponentVector& v);
IntPoly basis_product(const std::vector<IntPoly>& basis, const ExponentVector& v);

/// Sign +1, equal basis entries merged, zero exponents dropped, basis sorted
/// by (degree, coefficients). Numerators are monic products, so their
/// content is 1 and already coprime to the denominator.
IvpElement canonicalize(IvpElement e);

/// denom | fixed_divisor(num)
bool is_integer_valued(const IntPoly& num, const BigInt& denom);
bool is_member(const IvpElement& e);

/// fixed_divisor(numerator) == denom
bool is_image_primitive(const IvpElement& e);

bool is_unit(const IvpElement& e);

}  // namespace ivplab
