#include "ivplab/ffpoly.hpp"

#include <stdexcept>

#include "ivplab/errors.hpp"
#include "ivplab/padic.hpp"

namespace ivplab {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 invmod(u64 a, u64 p) {
  // p prime: a^(p-2)
  u64 result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1U) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    e >>= 1U;
  }
  return result;
}

void trim(std::vector<u64>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

void require_same_modulus(const FpPoly& a, const FpPoly& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("FpPoly modulus mismatch");
}

FpPoly mulmod_poly(const FpPoly& a, const FpPoly& b, const FpPoly& m) { return fp_rem(fp_mul(a, b), m); }

FpPoly powmod_poly(FpPoly base, u64 exp, const FpPoly& m) {
  FpPoly result = fp_rem(FpPoly::one(m.modulus()), m);
  base = fp_rem(base, m);
  while (exp > 0) {
    if (exp & 1U) result = mulmod_poly(result, base, m);
    exp >>= 1U;
    if (exp > 0) base = mulmod_poly(base, base, m);
  }
  return result;
}

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Integer roots of a monic polynomial: every root divides the constant term.
std::optional<BigInt> find_integer_root(const IntPoly& f) {
  const BigInt& c0 = f.coeffs().front();
  if (sgn(c0) == 0) return BigInt(0);
  if (mpz_sizeinbase(c0.get_mpz_t(), 2) > 40) return std::nullopt;
  std::vector<BigInt> divisors{1};
  for (const auto& [p, k] : factor_small(c0)) {
    std::size_t existing = divisors.size();
    BigInt pk = 1;
    for (unsigned e = 1; e <= k; ++e) {
      pk *= p;
      for (std::size_t i = 0; i < existing; ++i) divisors.push_back(divisors[i] * pk);
    }
  }
  for (const auto& d : divisors) {
    if (sgn(eval(f, d)) == 0) return d;
    BigInt neg = -d;
    if (sgn(eval(f, neg)) == 0) return neg;
  }
  return std::nullopt;
}

}  // namespace

FpPoly::FpPoly(u64 p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (p < 2) throw std::invalid_argument("FpPoly modulus must be prime");
  for (auto& c : c_) c %= p_;
  trim(c_);
}

FpPoly FpPoly::x(u64 p) { return FpPoly(p, {0, 1}); }
FpPoly FpPoly::one(u64 p) { return FpPoly(p, {1}); }

FpPoly reduce_mod(const IntPoly& f, const BigInt& p) {
  if (!is_prime(p)) throw std::invalid_argument("reduce_mod: " + p.get_str() + " is not prime");
  std::vector<u64> c;
  c.reserve(f.coeffs().size());
  BigInt r;
  for (const auto& a : f.coeffs()) {
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    c.push_back(to_u64(r));
  }
  return FpPoly(to_u64(p), std::move(c));
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b) {
  require_same_modulus(a, b);
  const u64 p = a.modulus();
  std::vector<u64> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    u64 x = i < a.coeffs().size() ? a.coeffs()[i] : 0;
    u64 y = i < b.coeffs().size() ? b.coeffs()[i] : 0;
    c[i] = static_cast<u64>((static_cast<u128>(x) + y) % p);
  }
  return FpPoly(p, std::move(c));
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b) {
  require_same_modulus(a, b);
  const u64 p = a.modulus();
  std::vector<u64> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    u64 x = i < a.coeffs().size() ? a.coeffs()[i] : 0;
    u64 y = i < b.coeffs().size() ? b.coeffs()[i] : 0;
    c[i] = x >= y ? x - y : p - (y - x);
  }
  return FpPoly(p, std::move(c));
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
  require_same_modulus(a, b);
  const u64 p = a.modulus();
  if (a.is_zero() || b.is_zero()) return FpPoly(p, {});
  std::vector<u64> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] = static_cast<u64>((static_cast<u128>(c[i + j]) + mulmod(a.coeffs()[i], b.coeffs()[j], p)) % p);
  return FpPoly(p, std::move(c));
}

FpPoly fp_rem(const FpPoly& a, const FpPoly& b) {
  require_same_modulus(a, b);
  if (b.is_zero()) throw std::invalid_argument("fp_rem by zero polynomial");
  const u64 p = a.modulus();
  std::vector<u64> r = a.coeffs();
  const auto& d = b.coeffs();
  const u64 lead_inv = invmod(d.back(), p);
  while (r.size() >= d.size()) {
    u64 factor = mulmod(r.back(), lead_inv, p);
    std::size_t shift = r.size() - d.size();
    for (std::size_t i = 0; i < d.size(); ++i) {
      u64 sub = mulmod(factor, d[i], p);
      u64& x = r[shift + i];
      x = x >= sub ? x - sub : p - (sub - x);
    }
    trim(r);
  }
  return FpPoly(p, std::move(r));
}

FpPoly fp_monic(const FpPoly& a) {
  if (a.is_zero()) return a;
  const u64 p = a.modulus();
  u64 inv = invmod(a.coeffs().back(), p);
  std::vector<u64> c = a.coeffs();
  for (auto& x : c) x = mulmod(x, inv, p);
  return FpPoly(p, std::move(c));
}

FpPoly gcd_mod(const FpPoly& a, const FpPoly& b) {
  require_same_modulus(a, b);
  FpPoly x = a, y = b;
  while (!y.is_zero()) {
    FpPoly r = fp_rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return fp_monic(x);
}

bool is_irreducible_mod_p(const FpPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("is_irreducible_mod_p: degree must be >= 1");
  if (!f.is_monic()) throw std::invalid_argument("is_irreducible_mod_p: polynomial must be monic");
  const u64 p = f.modulus();
  const auto n = static_cast<u64>(f.degree());
  if (n == 1) return true;

  // frob[k] = x^(p^k) mod f, k = 0..n
  std::vector<FpPoly> frob;
  frob.reserve(n + 1);
  frob.push_back(fp_rem(FpPoly::x(p), f));
  for (u64 k = 1; k <= n; ++k) frob.push_back(powmod_poly(frob.back(), p, f));

  const FpPoly x = fp_rem(FpPoly::x(p), f);
  if (frob[n] != x) return false;
  for (u64 r : prime_divisors(n)) {
    FpPoly g = gcd_mod(fp_sub(frob[n / r], x), f);
    if (g.degree() != 0) return false;
  }
  return true;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Irreducible: return "IRREDUCIBLE";
    case Verdict::Reducible: return "REDUCIBLE";
    case Verdict::Unverified: return "UNVERIFIED";
  }
  return "?";
}

std::string to_string(CertMethod m) {
  switch (m) {
    case CertMethod::DegreeOne: return "DEGREE_ONE";
    case CertMethod::ModP: return "MOD_P";
    case CertMethod::Eisenstein: return "EISENSTEIN";
    case CertMethod::None: return "NONE";
  }
  return "?";
}

std::string IrreducibilityCertificate::describe() const {
  std::string out = to_string(verdict) + " via " + to_string(method);
  if (method == CertMethod::ModP) out += "(" + std::to_string(prime) + ")";
  if (method == CertMethod::Eisenstein)
    out += "(" + std::to_string(prime) + ", shift " + shift.get_str() + ")";
  if (rational_root) out += " root " + rational_root->get_str();
  return out;
}

IntPoly taylor_shift(const IntPoly& f, const BigInt& s) {
  // Horner in the ring Z[x]: ((c_n)(x+s) + c_{n-1})(x+s) + ...
  const IntPoly xs(std::vector<BigInt>{s, BigInt(1)});
  IntPoly acc;
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * xs + IntPoly::constant(*it);
  return acc;
}

bool is_eisenstein(const IntPoly& f, const BigInt& p) {
  if (f.degree() < 1) return false;
  const auto& c = f.coeffs();
  if (mpz_divisible_p(c.back().get_mpz_t(), p.get_mpz_t())) return false;
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (!mpz_divisible_p(c[i].get_mpz_t(), p.get_mpz_t())) return false;
  BigInt p2 = p * p;
  return !mpz_divisible_p(c[0].get_mpz_t(), p2.get_mpz_t());
}

IrreducibilityCertificate certify_irreducible_over_Q(const IntPoly& f, std::span<const BigInt> hint_primes,
                                                     const CertifyOptions& options) {
  if (f.degree() < 1 || !f.is_monic())
    throw std::invalid_argument("certify_irreducible_over_Q: need a monic polynomial of degree >= 1");
  IrreducibilityCertificate cert;
  if (f.degree() == 1) {
    cert.verdict = Verdict::Irreducible;
    cert.method = CertMethod::DegreeOne;
    return cert;
  }

  for (const auto& p : hint_primes) {
    if (!is_prime(p)) continue;
    const std::uint64_t shifts = std::min(to_u64(p), options.max_shift);
    for (std::uint64_t s = 0; s < shifts; ++s) {
      BigInt shift = from_u64(s);
      IntPoly g = s == 0 ? f : taylor_shift(f, shift);
      if (!is_eisenstein(g, p)) continue;
      if (vp(g.coeffs().front(), p) != Valuation(1)) throw InvariantViolation("Eisenstein constant term valuation != 1");
      cert.verdict = Verdict::Irreducible;
      cert.method = CertMethod::Eisenstein;
      cert.prime = to_u64(p);
      cert.shift = shift;
      return cert;
    }
  }

  auto try_mod_p = [&](const BigInt& p) {
    if (!is_prime(p)) return false;
    FpPoly reduced = reduce_mod(f, p);
    if (reduced.degree() != f.degree()) return false;
    if (!is_irreducible_mod_p(reduced)) return false;
    if (content(f) != 1) throw InvariantViolation("MOD_P certificate on a non-primitive polynomial");
    cert.verdict = Verdict::Irreducible;
    cert.method = CertMethod::ModP;
    cert.prime = to_u64(p);
    return true;
  };
  for (const auto& p : hint_primes)
    if (try_mod_p(p)) return cert;
  for (std::uint64_t p : primes_up_to(options.scan_bound))
    if (try_mod_p(from_u64(p))) return cert;

  if (f.degree() <= 3) {
    if (auto root = find_integer_root(f)) {
      cert.verdict = Verdict::Reducible;
      cert.rational_root = *root;
    }
  }
  return cert;
}

}  // namespace ivplab
