#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ivplab/bigint.hpp"
#include "ivplab/element.hpp"
#include "ivplab/ffpoly.hpp"
#include "ivplab/poly.hpp"

namespace ivplab {

struct ConstructionParams {
  unsigned N = 2;
  BigInt p = 2;

  /// Throws std::invalid_argument unless N >= 2 and p is prime.
  void validate() const;
  /// Residue field size of (p) in Z.
  unsigned q() const;
};

/// Everything needed to re-check one witness F = prod(f_i) / p^(N-1)
/// independently of how the f_i were produced. Index q-1 (0-based) is the
/// distinguished factor with exponent N in g.
struct ConstructionWitness {
  ConstructionParams params;
  std::vector<BigInt> residues;
  std::vector<IntPoly> g;
  std::vector<IntPoly> f;
  std::vector<BigInt> aux_primes;
  BigInt modulus;
  unsigned denominator_exponent = 0;
  IvpElement F;
  std::vector<IrreducibilityCertificate> certificates;

  unsigned q() const { return static_cast<unsigned>(residues.size()); }
  /// Sum of the degrees of the g_i.
  unsigned d() const;
};

/// a_i = smallest non-negative x with x = i (mod p) and x = 0 (mod r) for
/// every prime r < p, for i = 0..p-1.
std::vector<BigInt> residue_system(const BigInt& p);

/// g_i = (x - a_i)^(N-1) for i < q-1, g_{q-1} = (x - a_{q-1})^N.
std::vector<IntPoly> build_g(const ConstructionParams& params, std::span<const BigInt> residues);

enum class PatternMode { AtLeast, Exact };

struct CheckResult {
  bool ok = true;
  std::size_t checked = 0;
  std::string violation;  // first violated instance

  explicit operator bool() const { return ok; }
};

/// Samples points c near each a_i and checks the p-adic valuation pattern
/// of polys[i](c): at least (resp. exactly) N-1 for i < q-1 and N for the
/// last index when v_p(c - a_i) >= 1 (resp. = 1); exactly 0 when
/// v_p(c - a_i) = 0 (Exact mode only).
CheckResult check_valuation_pattern(std::span<const IntPoly> polys, std::span<const BigInt> residues,
                                    const BigInt& p, unsigned N, PatternMode mode, unsigned probes = 64,
                                    std::uint64_t seed = 0x5eed);

/// prod over primes r <= d of r^(N+1).
BigInt replacement_modulus(unsigned N, unsigned d);

struct Replacement {
  std::vector<IntPoly> f;
  std::vector<BigInt> aux_primes;
  std::vector<IrreducibilityCertificate> certificates;
  BigInt modulus;
};

/// Monic f_i of the same degree with f_i = g_i mod replacement_modulus(N, d),
/// each Eisenstein at its own auxiliary prime r_i > d. Auxiliary primes are
/// the smallest primes above d unless supplied.
Replacement irreducible_replacement(const std::vector<IntPoly>& g, unsigned N,
                                    std::span<const BigInt> aux_override = {});

/// Smallest z >= 0 with Q not dividing prod f_i(z). Scans one full period.
BigInt other_prime_witness(std::span<const IntPoly> polys, const BigInt& Q);

/// For every prime r <= d and every sampled a: if v_r(f_i(a)) <= N or
/// v_r(g_i(a)) <= N then the two valuations agree.
CheckResult check_valuation_transfer(const ConstructionWitness& w, unsigned points_per_prime = 64);

struct FixedDivisorCertificate {
  BigInt value;                // fixed divisor of prod f_i
  unsigned long p_valuation = 0;
  BigInt attaining_point;      // c with v_p(prod f_i(c)) = N-1
  std::vector<std::pair<BigInt, BigInt>> other_primes;  // (r, z) for primes r <= d, r != p
};

/// Recomputes and certifies fixed_divisor(prod f_i) = p^(N-1). Throws
/// CheckFailed naming the failing prime or valuation.
FixedDivisorCertificate certify_fixed_divisor(const ConstructionWitness& w);

ConstructionWitness construct_F(const ConstructionParams& params, std::span<const BigInt> aux_override = {});

/// Re-validates every witness invariant from the stored data. Throws
/// CheckFailed with a diagnostic on the first violation.
void validate_witness(const ConstructionWitness& w);

/// Assembles F and the certificates from the stored polynomials.
void complete_witness(ConstructionWitness& w);

}  // namespace ivplab
