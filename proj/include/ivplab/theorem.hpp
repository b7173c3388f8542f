#pragma once

#include <span>
#include <string>
#include <vector>

#include "ivplab/construct.hpp"
#include "ivplab/engine.hpp"

namespace ivplab {

/// F^N = [prod_{i<q} f_i^N * f_q^(N-1) / p^(N(N-1))] * f_q, in witness basis
/// order. Throws InvariantViolation naming the predicted property that fails.
Factorization expected_length_two_factorization(const ConstructionWitness& w);

/// w_j for j = 1..q-1 with v_p(f_j(w_j)) = N-1 and v_p(f_i(w_j)) = 0 for
/// i != j. Tries a_j + p first, then a_j + p*t for p not dividing t.
std::vector<BigInt> quintessential_witnesses(const ConstructionWitness& w, unsigned scan_bound = 1000);

enum class AbsoluteIrreducibility { Absolutely, NotAbsolutely, Inapplicable };
std::string to_string(AbsoluteIrreducibility v);

/// Square-free denominator criterion: with unique factorizations of e^2 and
/// e^3, e is absolutely irreducible. `reports` must cover n = 2 and 3
/// unless an earlier power already factors non-uniquely.
AbsoluteIrreducibility verify_square_free_criterion(const IvpElement& e, std::span<const FactorizationReport> reports);

struct PowerCheck {
  unsigned n = 0;
  std::size_t count = 0;
  std::vector<std::size_t> lengths;
  bool asserted = false;  // false for n > N
  bool passed = true;
  std::string note;
};

struct TheoremVerification {
  ConstructionWitness witness;
  bool F_irreducible = false;
  bool F_image_primitive = false;
  std::vector<BigInt> quintessential;
  std::vector<FactorizationReport> reports;  // n = 1..n_max
  std::vector<PowerCheck> checks;
  bool length_two_matches = false;
  bool two_block_form = false;
  bool products_reconstruct = false;
  bool passed = false;
  std::vector<std::string> failures;
};

/// Checks, for the witness: F irreducible; exactly one factorization of F^n
/// for n < N; exactly two at n = N with lengths {2, N}, one of which is
/// expected_length_two_factorization. Powers N < n <= n_max are reported,
/// not asserted.
TheoremVerification verify_witness(const ConstructionWitness& w, unsigned n_max, const EngineConfig& config = {});
TheoremVerification verify_theorem(const ConstructionParams& params, unsigned n_max, const EngineConfig& config = {});

}  // namespace ivplab
