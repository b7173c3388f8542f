#include "ivplab/element.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ivplab/padic.hpp"

namespace ivplab {

void validate_shape(const IvpElement& e) {
  if (e.basis.size() != e.expo.size()) throw std::invalid_argument("element: basis and exponent sizes differ");
  for (const auto& f : e.basis) {
    if (f.degree() < 1) throw std::invalid_argument("element: basis polynomial must be non-constant");
    if (!f.is_monic()) throw std::invalid_argument("element: basis polynomial " + to_string(f) + " is not monic");
  }
  if (e.denom < 1) throw std::invalid_argument("element: denominator must be positive");
  if (e.sign != 1 && e.sign != -1) throw std::invalid_argument("element: sign must be +1 or -1");
}

IntPoly basis_product(const std::vector<IntPoly>& basis, const ExponentVector& v) {
  IntPoly out = IntPoly::constant(1);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (v[i] > 0) out *= pow(basis[i], v[i]);
  return out;
}

IntPoly numerator(const IvpElement& e) {
  IntPoly out = basis_product(e.basis, e.expo);
  return e.sign < 0 ? -out : out;
}

unsigned total_degree(const std::vector<IntPoly>& basis, const ExponentVector& v) {
  unsigned d = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) d += v[i] * static_cast<unsigned>(basis[i].degree());
  return d;
}

IvpElement canonicalize(IvpElement e) {
  validate_shape(e);
  std::vector<std::pair<IntPoly, unsigned>> entries;
  for (std::size_t i = 0; i < e.basis.size(); ++i)
    if (e.expo[i] > 0) entries.emplace_back(std::move(e.basis[i]), e.expo[i]);
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  IvpElement out;
  out.denom = e.denom;
  for (auto& [f, k] : entries) {
    if (!out.basis.empty() && out.basis.back() == f) {
      out.expo.back() += k;
    } else {
      out.basis.push_back(std::move(f));
      out.expo.push_back(k);
    }
  }
  return out;
}

bool is_integer_valued(const IntPoly& num, const BigInt& denom) {
  if (denom < 1) throw std::invalid_argument("is_integer_valued: denominator must be positive");
  BigInt d = fixed_divisor(num);
  return mpz_divisible_p(d.get_mpz_t(), denom.get_mpz_t()) != 0;
}

bool is_member(const IvpElement& e) { return is_integer_valued(numerator(e), e.denom); }

bool is_image_primitive(const IvpElement& e) { return fixed_divisor(numerator(e)) == e.denom; }

bool is_unit(const IvpElement& e) {
  return e.denom == 1 && std::ranges::all_of(e.expo, [](unsigned k) { return k == 0; });
}

}  // namespace ivplab
