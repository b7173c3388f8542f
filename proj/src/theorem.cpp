#include "ivplab/theorem.hpp"

#include <algorithm>
#include <stdexcept>

#include "ivplab/errors.hpp"
#include "ivplab/padic.hpp"

namespace ivplab {

namespace {

std::vector<Factor> sorted_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  return factors;
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string out;
  for (auto x : xs) out += (out.empty() ? "" : ",") + std::to_string(x);
  return "[" + out + "]";
}

}  // namespace

Factorization expected_length_two_factorization(const ConstructionWitness& w) {
  const unsigned N = w.params.N;
  const std::size_t q = w.f.size();
  ExponentVector big(q, N);
  big.back() = N - 1;
  ExponentVector last(q, 0);
  last.back() = 1;
  Factorization fz;
  fz.factors.push_back(Factor{big, pow(w.params.p, N * (N - 1))});
  fz.factors.push_back(Factor{last, BigInt(1)});

  const char* names[] = {"(prod_{i<q} f_i^N) f_q^(N-1) / p^(N(N-1))", "f_q"};
  for (std::size_t k = 0; k < 2; ++k) {
    IvpElement e = materialize(w.f, fz.factors[k]);
    const std::string name = names[k];
    if (!is_member(e)) throw InvariantViolation("predicted factor " + name + " is not integer-valued");
    if (!is_image_primitive(e)) throw InvariantViolation("predicted factor " + name + " is not image-primitive");
    if (!is_irreducible_ivp(e)) throw InvariantViolation("predicted factor " + name + " is not irreducible");
  }
  FactorizationReport shell;
  shell.basis = w.f;
  shell.target_expo = w.F.expo;
  shell.target_denom = w.F.denom;
  shell.n = N;
  if (!reconstructs_target(shell, fz)) throw InvariantViolation("predicted factors do not multiply to F^N");
  return fz;
}

std::vector<BigInt> quintessential_witnesses(const ConstructionWitness& w, unsigned scan_bound) {
  const BigInt& p = w.params.p;
  const unsigned N = w.params.N;
  const std::size_t q = w.f.size();
  std::vector<BigInt> out;
  for (std::size_t j = 0; j + 1 < q; ++j) {
    bool found = false;
    for (unsigned t = 1; t <= scan_bound && !found; ++t) {
      if (BigInt(t) % p == 0) continue;
      BigInt candidate = w.residues[j] + p * t;
      bool ok = true;
      for (std::size_t i = 0; i < q && ok; ++i) {
        Valuation v = vp(eval(w.f[i], candidate), p);
        ok = v == Valuation(i == j ? N - 1 : 0);
      }
      if (ok) {
        out.push_back(candidate);
        found = true;
      }
    }
    if (!found) throw InvariantViolation("no quintessential witness for f_" + std::to_string(j + 1));
  }
  return out;
}

std::string to_string(AbsoluteIrreducibility v) {
  switch (v) {
    case AbsoluteIrreducibility::Absolutely: return "ABSOLUTELY_IRREDUCIBLE";
    case AbsoluteIrreducibility::NotAbsolutely: return "NOT_ABSOLUTELY_IRREDUCIBLE";
    case AbsoluteIrreducibility::Inapplicable: return "INAPPLICABLE";
  }
  return "?";
}

AbsoluteIrreducibility verify_square_free_criterion(const IvpElement& e, std::span<const FactorizationReport> reports) {
  if (!is_square_free(e.denom)) return AbsoluteIrreducibility::Inapplicable;
  bool have2 = false, have3 = false;
  for (const auto& r : reports) {
    if (r.count() > 1) return AbsoluteIrreducibility::NotAbsolutely;
    have2 = have2 || r.n == 2;
    have3 = have3 || r.n == 3;
  }
  if (!have2 || !have3) throw std::invalid_argument("square-free criterion needs reports for n = 2 and n = 3");
  return AbsoluteIrreducibility::Absolutely;
}

TheoremVerification verify_witness(const ConstructionWitness& w, unsigned n_max, const EngineConfig& config) {
  const unsigned N = w.params.N;
  if (n_max < N) throw std::invalid_argument("n_max must be at least N");
  validate_witness(w);

  TheoremVerification out;
  out.witness = w;
  auto fail = [&](std::string msg) { out.failures.push_back(std::move(msg)); };

  out.F_image_primitive = is_image_primitive(w.F);
  if (!out.F_image_primitive) fail("F is not image-primitive");
  out.F_irreducible = is_irreducible_ivp(w.F);
  if (!out.F_irreducible) fail("F is not irreducible");
  out.quintessential = quintessential_witnesses(w);

  const Factorization predicted = expected_length_two_factorization(w);
  const auto predicted_sorted = sorted_factors(predicted.factors);
  const std::size_t distinguished = w.f.size() - 1;
  out.two_block_form = true;
  out.products_reconstruct = true;

  for (unsigned n = 1; n <= n_max; ++n) {
    FactorizationReport report = count_essential_factorizations(w.F, n, config);
    PowerCheck check;
    check.n = n;
    check.count = report.count();
    check.lengths = report.lengths();
    check.asserted = n <= N;

    for (const auto& fz : report.factorizations) {
      if (!reconstructs_target(report, fz)) {
        out.products_reconstruct = false;
        fail("n = " + std::to_string(n) + ": a factorization does not multiply back to F^n");
      }
      for (const auto& factor : fz.factors) {
        IvpElement e = materialize(report.basis, factor);
        if (!is_image_primitive(e) || !is_irreducible_ivp(e))
          throw InvariantViolation("engine emitted a factor that is not an image-primitive atom");
      }
      if (n <= N && !refines_to_two_block_form(fz, distinguished)) {
        out.two_block_form = false;
        fail("n = " + std::to_string(n) + ": a factorization does not refine to the two-block form");
      }
    }

    if (n < N) {
      const Factor F_factor{w.F.expo, w.F.denom};
      bool trivial = report.count() == 1 && report.factorizations[0].factors == std::vector<Factor>(n, F_factor);
      check.passed = trivial;
      check.note = trivial ? "unique: F^n = F...F" : "expected the unique factorization F...F";
    } else if (n == N) {
      std::vector<std::size_t> lengths = check.lengths;
      std::sort(lengths.begin(), lengths.end());
      std::vector<std::size_t> want{2, N};
      std::sort(want.begin(), want.end());
      bool has_predicted = std::ranges::any_of(report.factorizations, [&](const Factorization& fz) {
        return sorted_factors(fz.factors) == predicted_sorted;
      });
      out.length_two_matches = has_predicted;
      check.passed = report.count() == 2 && lengths == want && has_predicted;
      check.note = check.passed ? "two factorizations, lengths {2, N}, length-2 form as predicted"
                                : "expected two factorizations with lengths {2, N} including the predicted one";
    } else {
      check.note = "exploratory";
    }
    if (check.asserted && !check.passed)
      fail("n = " + std::to_string(n) + ": count " + std::to_string(check.count) + ", lengths " + join(check.lengths) +
           " (" + check.note + ")");
    out.checks.push_back(std::move(check));
    out.reports.push_back(std::move(report));
  }

  out.passed = out.failures.empty();
  return out;
}

TheoremVerification verify_theorem(const ConstructionParams& params, unsigned n_max, const EngineConfig& config) {
  return verify_witness(construct_F(params), n_max, config);
}

}  // namespace ivplab
