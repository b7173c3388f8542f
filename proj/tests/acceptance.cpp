// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "generators.hpp"
#include "ivplab/construct.hpp"
#include "ivplab/engine.hpp"
#include "ivplab/ffpoly.hpp"
#include "ivplab/oracle.hpp"
#include "ivplab/padic.hpp"
#include "ivplab/theorem.hpp"

using namespace ivplab;
using ivplab::testing::uniform;

namespace {

const std::vector<std::pair<unsigned, unsigned>> kGrid{{2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}};

struct Criterion {
  bool ok = true;
  std::ostringstream why;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

std::vector<ConstructionWitness>& grid_witnesses() {
  static std::vector<ConstructionWitness> ws = [] {
    std::vector<ConstructionWitness> out;
    for (auto [N, p] : kGrid) out.push_back(construct_F({N, p}));
    return out;
  }();
  return ws;
}

std::string tag(const ConstructionWitness& w) {
  return "(N=" + std::to_string(w.params.N) + ",p=" + w.params.p.get_str() + ") ";
}

BigInt product_at(std::span<const IntPoly> polys, const BigInt& c) {
  BigInt v = 1;
  for (const auto& f : polys) v *= eval(f, c);
  return v;
}

BigInt window_gcd(const IntPoly& f, long radius) {
  BigInt g = 0;
  for (long a = -radius; a <= radius; ++a) {
    BigInt v = eval(f, BigInt(a));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  return g;
}

std::vector<Factor> sorted_factors(Factorization f) {
  std::sort(f.factors.begin(), f.factors.end());
  return f.factors;
}

void criterion1(Criterion& c) {
  for (const auto& w : grid_witnesses()) {
    const unsigned N = w.params.N;
    auto t0 = std::chrono::steady_clock::now();
    auto v = verify_witness(w, N);
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(v.passed, tag(w) + "verify failed");
    c.require(v.F_irreducible, tag(w) + "F not irreducible");
    for (unsigned n = 1; n < N; ++n) c.require(v.reports[n - 1].count() == 1, tag(w) + "count != 1 below N");
    const auto& top = v.reports[N - 1];
    auto lengths = top.lengths();
    std::sort(lengths.begin(), lengths.end());
    c.require(top.count() == 2, tag(w) + "count at N != 2");
    c.require(lengths == std::vector<std::size_t>{2, N}, tag(w) + "lengths at N != {2, N}");
    auto expected = sorted_factors(expected_length_two_factorization(w));
    bool found = std::any_of(top.factorizations.begin(), top.factorizations.end(),
                             [&](const Factorization& f) { return sorted_factors(f) == expected; });
    c.require(found, tag(w) + "explicit length-2 factorization missing");
    c.require(secs < 120.0, tag(w) + "slower than 2 minutes");
  }
}

void criterion2(Criterion& c) {
  for (const auto& w : grid_witnesses()) {
    const BigInt target = pow(w.params.p, w.params.N - 1);
    IntPoly pf{1}, pg{1};
    for (const auto& f : w.f) pf = pf * f;
    for (const auto& g : w.g) pg = pg * g;
    c.require(fixed_divisor(pf) == target, tag(w) + "fixed divisor of prod f");
    c.require(fixed_divisor(pg) == target, tag(w) + "fixed divisor of prod g");
  }
}

void criterion3(Criterion& c) {
  for (const auto& w : grid_witnesses()) {
    const unsigned N = w.params.N;
    const BigInt M = replacement_modulus(N, w.d());
    for (std::size_t i = 0; i < w.q(); ++i) {
      const auto& f = w.f[i];
      const std::vector<BigInt> hint{w.aux_primes[i]};
      c.require(w.certificates[i].verdict == Verdict::Irreducible, tag(w) + "stored certificate");
      c.require(certify_irreducible_over_Q(f, hint).verdict == Verdict::Irreducible, tag(w) + "recertification");
      c.require(f.is_monic() && f.degree() == w.g[i].degree(), tag(w) + "monic / degree");
      for (std::size_t k = i + 1; k < w.q(); ++k) c.require(f != w.f[k], tag(w) + "f not distinct");
      for (int j = 0; j <= f.degree(); ++j) {
        BigInt diff = f.coeff(j) - w.g[i].coeff(j);
        c.require(mpz_divisible_p(diff.get_mpz_t(), M.get_mpz_t()) != 0, tag(w) + "congruence mod M");
      }
    }
    // valuation transfer: min(v_r(f_i(a)), N+1) == min(v_r(g_i(a)), N+1) with >= 64 points per prime
    std::mt19937_64 rng(7 + N);
    for (auto r : primes_up_to(w.d())) {
      unsigned points = 0;
      for (; points < 64; ++points) {
        BigInt a = BigInt(static_cast<unsigned long>(rng() % 1000000)) - 500000;
        for (std::size_t i = 0; i < w.q(); ++i) {
          Valuation vf = vp(eval(w.f[i], a), r), vg = vp(eval(w.g[i], a), r);
          auto cap = [&](const Valuation& v) { return v.is_infinite() ? N + 1 : std::min<unsigned long>(v.value(), N + 1); };
          c.require(cap(vf) == cap(vg), tag(w) + "valuation transfer at r=" + std::to_string(r));
        }
      }
      c.require(points >= 64, "too few points");
    }
    c.require(static_cast<bool>(check_valuation_transfer(w, 64)), tag(w) + "library transfer check");
  }
}

void criterion4(Criterion& c) {
  for (const auto& w : grid_witnesses()) {
    const unsigned N = w.params.N;
    const BigInt& p = w.params.p;
    auto ws = quintessential_witnesses(w);
    c.require(ws.size() == w.q() - 1, tag(w) + "missing quintessential witnesses");
    for (std::size_t j = 0; j < ws.size(); ++j)
      for (std::size_t i = 0; i < w.q(); ++i) {
        Valuation v = vp(eval(w.f[i], ws[j]), p);
        c.require(v == Valuation(i == j ? N - 1 : 0), tag(w) + "quintessential valuation");
      }
    for (unsigned n = 1; n <= N; ++n) {
      auto r = count_essential_factorizations(w.F, n);
      for (const auto& fz : r.factorizations) {
        c.require(refines_to_two_block_form(fz, w.q() - 1), tag(w) + "two-block form");
        // each factor is (a,...,a,b); the factors' a's and b's each sum to n
        unsigned a_sum = 0, b_sum = 0;
        for (const auto& f : fz.factors) {
          a_sum += f.expo[0];
          b_sum += f.expo.back();
        }
        c.require(a_sum == n && b_sum == n, tag(w) + "block sums");
      }
    }
  }
}

void criterion5(Criterion& c) {
  for (const auto& w : grid_witnesses()) {
    const unsigned N = w.params.N;
    OracleConfig cfg;
    cfg.sample_radius = std::max(10u, N * w.d());
    for (unsigned n = 1; n <= N; ++n) {
      auto o = brute_force_factorizations(w.F, n, cfg);
      auto r = count_essential_factorizations(w.F, n);
      c.require(o.classes == classes_of(r), tag(w) + "oracle disagrees at n=" + std::to_string(n));
    }
  }
  int done = 0;
  while (done < 100) {
    auto e = ivplab::testing::random_image_primitive(3, 3);
    if (e.denom > 36) continue;
    ++done;
    const unsigned n = static_cast<unsigned>(uniform(1, 2));
    OracleConfig cfg;
    cfg.sample_radius = std::max(10, static_cast<int>(n) * numerator(e).degree());
    auto o = brute_force_factorizations(e, n, cfg);
    auto r = count_essential_factorizations(e, n);
    c.require(o.classes == classes_of(r), "random element " + to_string(numerator(e)) + " / " + e.denom.get_str() +
                                              " n=" + std::to_string(n));
  }
}

std::vector<FpPoly> all_monic(std::uint64_t p, int degree) {
  std::vector<FpPoly> out;
  std::vector<std::uint64_t> coef(degree + 1, 0);
  coef[degree] = 1;
  std::function<void(int)> rec = [&](int i) {
    if (i == degree) {
      out.emplace_back(p, coef);
      return;
    }
    for (std::uint64_t v = 0; v < p; ++v) {
      coef[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

void criterion6(Criterion& c) {
  using ivplab::testing::random_nonzero_poly;
  for (int i = 0; i < 500; ++i) {
    IntPoly f = random_nonzero_poly(8, 20);
    c.require(fixed_divisor(f) == window_gcd(f, 100), "fixed divisor vs sampling: " + to_string(f));
  }
  for (int i = 0; i < 500; ++i) {
    IntPoly g = random_nonzero_poly(5, 12), h = random_nonzero_poly(5, 12);
    BigInt prod = fixed_divisor(g) * fixed_divisor(h), whole = fixed_divisor(g * h);
    c.require(mpz_divisible_p(whole.get_mpz_t(), prod.get_mpz_t()) != 0, "submultiplicativity");
  }
  int rabin_cases = 0;
  for (std::uint64_t p : {2u, 3u})
    for (int deg = 1; deg <= 4; ++deg)
      for (const auto& f : all_monic(p, deg)) {
        bool split = false;
        for (int k = 1; 2 * k <= deg && !split; ++k)
          for (const auto& g : all_monic(p, k))
            if (fp_rem(f, g).is_zero()) split = true;
        c.require(is_irreducible_mod_p(f) == !split, "Rabin vs exhaustive search");
        ++rabin_cases;
      }
  c.require(rabin_cases == 2 + 4 + 8 + 16 + 3 + 9 + 27 + 81, "Rabin case count");
  const std::vector<IntPoly> pool{{0, 1}, {-1, 1}, {2, 1}, {1, 0, 1}, {2, 1, 1}};
  for (int i = 0; i < 500; ++i) {
    IvpElement e;
    e.denom = uniform(1, 36);
    e.sign = uniform(0, 1) ? 1 : -1;
    for (long k = uniform(0, 5); k > 0; --k) {
      e.basis.push_back(pool[uniform(0, 4)]);
      e.expo.push_back(static_cast<unsigned>(uniform(0, 3)));
    }
    auto once = canonicalize(e);
    c.require(canonicalize(once) == once, "canonicalization idempotence");
  }
  int reconstructed = 0;
  for (const auto& w : grid_witnesses())
    for (unsigned n = 1; n <= w.params.N; ++n) {
      auto r = count_essential_factorizations(w.F, n);
      for (const auto& fz : r.factorizations) {
        c.require(reconstructs_target(r, fz), tag(w) + "product reconstruction");
        ++reconstructed;
      }
    }
  while (reconstructed < 500) {
    auto e = ivplab::testing::random_image_primitive(3, 3);
    auto r = count_essential_factorizations(e, static_cast<unsigned>(uniform(1, 2)));
    for (const auto& fz : r.factorizations) {
      c.require(reconstructs_target(r, fz), "product reconstruction of a random element");
      ++reconstructed;
    }
  }
}

void criterion7(Criterion& c) {
  for (const auto& w : grid_witnesses()) {
    if (w.params.N != 2) continue;
    std::vector<FactorizationReport> reports;
    for (unsigned n = 1; n <= 3; ++n) reports.push_back(count_essential_factorizations(w.F, n));
    c.require(reports[1].count() == 2, tag(w) + "count at n=2");
    c.require(verify_square_free_criterion(w.F, reports) == AbsoluteIrreducibility::NotAbsolutely,
              tag(w) + "criterion verdict");
  }
  IvpElement binom{{IntPoly{0, 1}, IntPoly{-1, 1}}, {1, 1}, 2, 1};
  bool all_unique = true;
  std::vector<FactorizationReport> reports;
  for (unsigned n = 1; n <= 3; ++n) {
    auto o = brute_force_factorizations(binom, n);
    reports.push_back(count_essential_factorizations(binom, n));
    c.require(o.classes == classes_of(reports.back()), "binomial oracle agreement");
    all_unique = all_unique && o.count() == 1;
  }
  auto expected = all_unique ? AbsoluteIrreducibility::Absolutely : AbsoluteIrreducibility::NotAbsolutely;
  c.require(verify_square_free_criterion(binom, reports) == expected, "binomial verdict disagrees with oracle counts");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, void (*)(Criterion&)>> criteria{
      {"1 witness grid: unique below N, two factorizations {2, N} at N", criterion1},
      {"2 fixed divisor of prod f and prod g is p^(N-1)", criterion2},
      {"3 replacement polynomials: certified, congruent, valuation transfer", criterion3},
      {"4 quintessential witnesses and two-block form", criterion4},
      {"5 engine agrees with the brute-force oracle", criterion5},
      {"6 property suites", criterion6},
      {"7 square-free criterion consistency", criterion7},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Criterion c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (c.ok ? "PASS" : "FAIL") << "  criterion " << name << "  (" << static_cast<long>(ms) << " ms)";
    if (!c.ok) std::cout << "  -- " << c.why.str();
    std::cout << std::endl;
    failed += !c.ok;
  }
  return failed == 0 ? 0 : 1;
}
