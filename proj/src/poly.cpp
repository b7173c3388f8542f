#include "ivplab/poly.hpp"

#include <stdexcept>

namespace ivplab {

std::optional<BigInt> parse_decimal(std::string_view text) {
  std::size_t start = (!text.empty() && text.front() == '-') ? 1 : 0;
  if (text.size() == start) return std::nullopt;
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9') return std::nullopt;
  return BigInt(std::string(text), 10);
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, unsigned degree) {
  std::vector<BigInt> coeffs(degree + 1);
  coeffs[degree] = c;
  return IntPoly(std::move(coeffs));
}

IntPoly IntPoly::linear_root(const BigInt& root) {
  return IntPoly(std::vector<BigInt>{BigInt(-root), BigInt(1)});
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

const BigInt& IntPoly::leading() const {
  if (coeffs_.empty()) throw std::invalid_argument("leading coefficient of zero polynomial");
  return coeffs_.back();
}

bool IntPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

std::strong_ordering operator<=>(const IntPoly& a, const IntPoly& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

IntPoly add(const IntPoly& a, const IntPoly& b) { return a + b; }
IntPoly mul(const IntPoly& a, const IntPoly& b) { return a * b; }

IntPoly pow(const IntPoly& a, unsigned k) {
  IntPoly result = IntPoly::constant(1);
  IntPoly base = a;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

BigInt eval(const IntPoly& f, const BigInt& a) {
  BigInt acc = 0;
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= a;
    acc += *it;
  }
  return acc;
}

BigInt content(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("content of the zero polynomial");
  BigInt g = 0;
  for (const auto& c : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::string to_string(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const BigInt& c = f.coeffs()[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    BigInt mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    bool unit = (mag == 1) && i > 0;
    if (!unit) out += mag.get_str();
    if (i > 0) {
      if (!unit) out += "*";
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace ivplab
