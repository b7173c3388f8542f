#include "ivplab/construct.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "ivplab/errors.hpp"
#include "ivplab/padic.hpp"

namespace ivplab {

namespace {

// Smallest non-negative x with x = r1 (mod m1), x = r2 (mod m2), gcd(m1, m2) = 1.
BigInt crt_pair(const BigInt& r1, const BigInt& m1, const BigInt& r2, const BigInt& m2) {
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t()) == 0)
    throw InvariantViolation("crt_pair: moduli not coprime");
  BigInt k = ((r2 - r1) * inv) % m2;
  if (sgn(k) < 0) k += m2;
  BigInt modulus = m1 * m2;
  BigInt x = (r1 + m1 * k) % modulus;
  if (sgn(x) < 0) x += modulus;
  return x;
}

BigInt mod_nonneg(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

unsigned degree_sum(std::span<const IntPoly> polys) {
  unsigned d = 0;
  for (const auto& f : polys) d += static_cast<unsigned>(f.degree());
  return d;
}

IntPoly product(std::span<const IntPoly> polys) {
  IntPoly out = IntPoly::constant(1);
  for (const auto& f : polys) out *= f;
  return out;
}

}  // namespace

void ConstructionParams::validate() const {
  if (N < 2) throw std::invalid_argument("N must be at least 2");
  if (!fits_u64(p) || !is_prime(p)) throw std::invalid_argument("p must be a prime below 2^64, got " + p.get_str());
  if (p > 1'000'000) throw std::invalid_argument("p too large: q = p basis polynomials would be built");
}

unsigned ConstructionParams::q() const { return static_cast<unsigned>(p.get_ui()); }

unsigned ConstructionWitness::d() const { return degree_sum(g); }

std::vector<BigInt> residue_system(const BigInt& p) {
  if (!is_prime(p)) throw std::invalid_argument("residue_system: p must be prime");
  BigInt small_primes = 1;
  for (auto r : primes_up_to(to_u64(p) - 1)) small_primes *= from_u64(r);
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), BigInt(small_primes % p).get_mpz_t(), p.get_mpz_t());
  std::vector<BigInt> out;
  for (std::uint64_t i = 0; i < to_u64(p); ++i) {
    BigInt k = (from_u64(i) * inv) % p;
    out.push_back(small_primes * k);
  }
  return out;
}

std::vector<IntPoly> build_g(const ConstructionParams& params, std::span<const BigInt> residues) {
  if (residues.empty()) throw std::invalid_argument("build_g: empty residue system");
  std::vector<IntPoly> g;
  g.reserve(residues.size());
  for (std::size_t i = 0; i < residues.size(); ++i) {
    unsigned k = i + 1 < residues.size() ? params.N - 1 : params.N;
    g.push_back(pow(IntPoly::linear_root(residues[i]), k));
  }
  return g;
}

CheckResult check_valuation_pattern(std::span<const IntPoly> polys, std::span<const BigInt> residues,
                                    const BigInt& p, unsigned N, PatternMode mode, unsigned probes,
                                    std::uint64_t seed) {
  if (polys.size() != residues.size()) throw std::invalid_argument("check_valuation_pattern: size mismatch");
  CheckResult result;
  const std::size_t q = polys.size();
  const std::uint64_t pu = to_u64(p);

  auto check_point = [&](std::size_t i, const BigInt& c) {
    const unsigned long expected = i + 1 < q ? N - 1 : N;
    Valuation shift = vp(c - residues[i], p);
    Valuation actual = vp(eval(polys[i], c), p);
    bool ok = true;
    std::string rule;
    if (shift >= Valuation(1)) {
      if (mode == PatternMode::AtLeast) {
        ok = actual >= Valuation(expected);
        rule = ">= " + std::to_string(expected);
      } else if (shift == Valuation(1)) {
        ok = actual == Valuation(expected);
        rule = "== " + std::to_string(expected);
      } else {
        return;
      }
    } else if (mode == PatternMode::Exact) {
      ok = actual == Valuation(0);
      rule = "== 0";
    } else {
      return;
    }
    ++result.checked;
    if (!ok && result.ok) {
      result.ok = false;
      result.violation = "index " + std::to_string(i + 1) + ", c = " + c.get_str() + ": v_p(c - a_i) = " +
                         to_string(shift) + ", v_p(poly(c)) = " + to_string(actual) + ", expected " + rule;
    }
  };

  std::mt19937_64 rng(seed);
  const std::int64_t radius = static_cast<std::int64_t>(std::min<std::uint64_t>(pu * pu * pu, 1'000'000));
  std::uniform_int_distribution<std::int64_t> dist(-radius, radius);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::uint64_t t = 1; t <= pu * pu; ++t) check_point(i, residues[i] + p * from_u64(t));
    for (std::uint64_t u = 1; u < pu; ++u) check_point(i, residues[i] + from_u64(u));
    for (unsigned k = 0; k < probes; ++k) check_point(i, BigInt(static_cast<long>(dist(rng))));
  }
  return result;
}

BigInt replacement_modulus(unsigned N, unsigned d) {
  if (d < 1) throw std::invalid_argument("replacement_modulus: d must be >= 1");
  BigInt m = 1;
  for (auto r : primes_up_to(d)) m *= pow(from_u64(r), N + 1);
  return m;
}

Replacement irreducible_replacement(const std::vector<IntPoly>& g, unsigned N, std::span<const BigInt> aux_override) {
  for (const auto& gi : g)
    if (gi.degree() < 1 || !gi.is_monic()) throw std::invalid_argument("irreducible_replacement: g must be monic, non-constant");
  const unsigned d = degree_sum(g);
  Replacement out;
  out.modulus = replacement_modulus(N, d);

  if (!aux_override.empty()) {
    if (aux_override.size() != g.size())
      throw std::invalid_argument("expected " + std::to_string(g.size()) + " auxiliary primes");
    std::set<BigInt> seen;
    for (const auto& r : aux_override) {
      if (!fits_u64(r) || !is_prime(r) || r <= d)
        throw std::invalid_argument("auxiliary prime " + r.get_str() + " must be a prime above " + std::to_string(d));
      if (!seen.insert(r).second) throw std::invalid_argument("auxiliary primes must be distinct");
    }
    out.aux_primes.assign(aux_override.begin(), aux_override.end());
  } else {
    std::uint64_t r = d;
    for (std::size_t i = 0; i < g.size(); ++i) {
      r = next_prime(r);
      out.aux_primes.push_back(from_u64(r));
    }
  }

  for (std::size_t i = 0; i < g.size(); ++i) {
    const BigInt& r = out.aux_primes[i];
    const BigInt r2 = r * r;
    const auto& gc = g[i].coeffs();
    std::vector<BigInt> coeffs(gc.size());
    coeffs.back() = 1;
    for (std::size_t j = 0; j + 1 < gc.size(); ++j) {
      BigInt target_mod_r2 = j == 0 ? r : BigInt(0);
      coeffs[j] = crt_pair(mod_nonneg(gc[j], out.modulus), out.modulus, target_mod_r2, r2);
    }
    IntPoly fi(std::move(coeffs));
    if (!is_eisenstein(fi, r))
      throw InvariantViolation("replacement f_" + std::to_string(i + 1) + " is not Eisenstein at " + r.get_str());
    std::vector<BigInt> hint{r};
    auto cert = certify_irreducible_over_Q(fi, hint);
    if (cert.verdict != Verdict::Irreducible)
      throw InvariantViolation("replacement f_" + std::to_string(i + 1) + " not certified irreducible");
    out.f.push_back(std::move(fi));
    out.certificates.push_back(std::move(cert));
  }

  for (std::size_t i = 0; i < out.f.size(); ++i)
    for (std::size_t j = i + 1; j < out.f.size(); ++j)
      if (out.f[i] == out.f[j]) throw InvariantViolation("replacement polynomials are not pairwise distinct");
  return out;
}

BigInt other_prime_witness(std::span<const IntPoly> polys, const BigInt& Q) {
  if (!is_prime(Q)) throw std::invalid_argument("other_prime_witness: Q must be prime");
  for (BigInt z = 0; z < Q; ++z) {
    bool hit = std::ranges::none_of(polys, [&](const IntPoly& f) {
      BigInt v = eval(f, z);
      return mpz_divisible_p(v.get_mpz_t(), Q.get_mpz_t()) != 0;
    });
    if (hit) return z;
  }
  throw InvariantViolation("no z with " + Q.get_str() + " not dividing the product found in a full period");
}

CheckResult check_valuation_transfer(const ConstructionWitness& w, unsigned points_per_prime) {
  CheckResult result;
  const unsigned N = w.params.N;
  const long p = static_cast<long>(w.params.p.get_ui());
  const long radius = std::max<long>(p * p * p, (points_per_prime + 1) / 2);
  for (auto ru : primes_up_to(w.d())) {
    const BigInt r = from_u64(ru);
    std::size_t points = 0;
    for (long a = -radius; a <= radius; ++a, ++points) {
      const BigInt at(a);
      for (std::size_t i = 0; i < w.f.size(); ++i) {
        Valuation vf = vp(eval(w.f[i], at), r);
        Valuation vg = vp(eval(w.g[i], at), r);
        if (vf > Valuation(N) && vg > Valuation(N)) continue;
        ++result.checked;
        if (vf != vg && result.ok) {
          result.ok = false;
          result.violation = "r = " + r.get_str() + ", a = " + at.get_str() + ", i = " + std::to_string(i + 1) +
                             ": v_r(f_i(a)) = " + to_string(vf) + ", v_r(g_i(a)) = " + to_string(vg);
        }
      }
    }
    if (points < points_per_prime) throw InvariantViolation("valuation transfer: too few sample points");
  }
  return result;
}

FixedDivisorCertificate certify_fixed_divisor(const ConstructionWitness& w) {
  const BigInt& p = w.params.p;
  const unsigned N = w.params.N;
  FixedDivisorCertificate cert;
  const IntPoly prod = product(w.f);
  cert.value = fixed_divisor(prod);

  BigInt rest;
  cert.p_valuation = mpz_remove(rest.get_mpz_t(), cert.value.get_mpz_t(), p.get_mpz_t());
  if (cert.p_valuation != N - 1)
    throw CheckFailed("fixed divisor has p-valuation " + std::to_string(cert.p_valuation) + ", expected " +
                      std::to_string(N - 1));
  if (rest != 1) {
    auto primes = primes_dividing_fixed_divisor(prod);
    std::string names;
    for (const auto& r : primes)
      if (r != p) names += " " + r.get_str();
    throw CheckFailed("fixed divisor divisible by other primes:" + names);
  }

  cert.attaining_point = w.residues.front() + p;
  if (vp(eval(prod, cert.attaining_point), p) != Valuation(N - 1))
    throw CheckFailed("v_p(prod f_i) at a_1 + p is not N-1");

  for (auto ru : primes_up_to(w.d())) {
    BigInt r = from_u64(ru);
    if (r == p) continue;
    cert.other_primes.emplace_back(r, other_prime_witness(w.f, r));
  }
  return cert;
}

void complete_witness(ConstructionWitness& w) {
  w.denominator_exponent = w.params.N - 1;
  w.F = IvpElement{w.f, ExponentVector(w.f.size(), 1), pow(w.params.p, w.denominator_exponent), 1};
  w.certificates.clear();
  for (std::size_t i = 0; i < w.f.size(); ++i) {
    std::vector<BigInt> hint;
    if (i < w.aux_primes.size()) hint.push_back(w.aux_primes[i]);
    w.certificates.push_back(certify_irreducible_over_Q(w.f[i], hint));
  }
}

ConstructionWitness construct_F(const ConstructionParams& params, std::span<const BigInt> aux_override) {
  params.validate();
  ConstructionWitness w;
  w.params = params;
  w.residues = residue_system(params.p);
  w.g = build_g(params, w.residues);
  Replacement rep = irreducible_replacement(w.g, params.N, aux_override);
  w.f = std::move(rep.f);
  w.aux_primes = std::move(rep.aux_primes);
  w.modulus = std::move(rep.modulus);
  complete_witness(w);

  const BigInt expected = pow(params.p, params.N - 1);
  if (fixed_divisor(product(w.g)) != expected) throw InvariantViolation("fixed divisor of prod g_i is not p^(N-1)");
  try {
    certify_fixed_divisor(w);
  } catch (const CheckFailed& e) {
    throw InvariantViolation(std::string("constructed witness: ") + e.what());
  }
  return w;
}

void validate_witness(const ConstructionWitness& w) {
  const auto& P = w.params;
  try {
    P.validate();
  } catch (const std::invalid_argument& e) {
    throw CheckFailed(std::string("witness parameters: ") + e.what());
  }
  const unsigned q = P.q();
  if (w.residues.size() != q || w.g.size() != q || w.f.size() != q || w.aux_primes.size() != q)
    throw CheckFailed("witness must list exactly q = p residues, g, f and auxiliary primes");

  std::set<BigInt> classes;
  for (const auto& a : w.residues) {
    classes.insert(mod_nonneg(a, P.p));
    for (auto r : primes_up_to(to_u64(P.p) - 1))
      if (!mpz_divisible_ui_p(a.get_mpz_t(), r))
        throw CheckFailed("residue " + a.get_str() + " is not divisible by the small prime " + std::to_string(r));
  }
  if (classes.size() != q) throw CheckFailed("residues are not a complete system modulo p");

  if (w.g != build_g(P, w.residues)) throw CheckFailed("g does not match the residues");
  if (w.modulus != replacement_modulus(P.N, w.d())) throw CheckFailed("modulus does not match N and d");
  if (w.denominator_exponent != P.N - 1) throw CheckFailed("denominator exponent is not N-1");

  for (std::size_t i = 0; i < q; ++i) {
    const auto& fi = w.f[i];
    const std::string tag = "f_" + std::to_string(i + 1);
    if (!fi.is_monic() || fi.degree() != w.g[i].degree()) throw CheckFailed(tag + " is not monic of the degree of g_i");
    for (int j = 0; j <= fi.degree(); ++j) {
      BigInt diff = fi.coeff(static_cast<std::size_t>(j)) - w.g[i].coeff(static_cast<std::size_t>(j));
      if (!mpz_divisible_p(diff.get_mpz_t(), w.modulus.get_mpz_t()))
        throw CheckFailed(tag + " is not congruent to g_i modulo the replacement modulus (coefficient " +
                          std::to_string(j) + ")");
    }
    for (std::size_t k = i + 1; k < q; ++k)
      if (fi == w.f[k]) throw CheckFailed("f polynomials are not pairwise distinct");
    std::vector<BigInt> hint{w.aux_primes[i]};
    if (certify_irreducible_over_Q(fi, hint).verdict != Verdict::Irreducible)
      throw CheckFailed(tag + " could not be certified irreducible");
  }

  if (!w.F.basis.empty() || !w.certificates.empty()) {
    if (w.F.basis != w.f || w.F.denom != pow(P.p, P.N - 1) || w.F.expo != ExponentVector(q, 1) || w.F.sign != 1)
      throw CheckFailed("F is not prod f_i / p^(N-1)");
  }
  certify_fixed_divisor(w);
}

}  // namespace ivplab
