#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ivplab/bigint.hpp"
#include "ivplab/element.hpp"
#include "ivplab/poly.hpp"

namespace ivplab {

/// One factor prod(basis^expo) / denom of a factorization; the basis is the
/// one of the enclosing report.
struct Factor {
  ExponentVector expo;
  BigInt denom;

  friend bool operator==(const Factor&, const Factor&) = default;
  friend std::strong_ordering operator<=>(const Factor& a, const Factor& b) {
    if (auto c = a.expo <=> b.expo; c != 0) return c;
    int c = cmp(a.denom, b.denom);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
};

struct Factorization {
  std::vector<Factor> factors;
  std::size_t length() const { return factors.size(); }
};

/// All essentially different factorizations of target^n into irreducibles.
struct FactorizationReport {
  std::vector<IntPoly> basis;
  ExponentVector target_expo;
  BigInt target_denom;
  unsigned n = 1;
  std::vector<Factorization> factorizations;
  std::uint64_t nodes_explored = 0;

  std::size_t count() const { return factorizations.size(); }
  /// Lengths in report order.
  std::vector<std::size_t> lengths() const;
};

struct EngineConfig {
  std::uint64_t budget = 10'000'000;  // partition nodes
  unsigned threads = 1;
};

/// Enumerates every factorization of e^n into irreducible elements of
/// Int(Z), each essential class exactly once.
///
/// Every factor of an image-primitive element is image-primitive, and by
/// Gauss's lemma its numerator is a sub-product of the basis, so a factor is
/// determined by its exponent vector v: prod(f^v) / d(prod f^v). A multiset
/// {v_j} summing to n*expo is a factorization iff the fixed divisors of the
/// parts multiply to denom^n and each part is an atom. Parts are generated in
/// non-increasing mixed-radix order, so no deduplication is needed.
///
/// Requires distinct monic basis polynomials and an image-primitive e.
/// Throws BudgetExceeded when the node budget runs out.
FactorizationReport count_essential_factorizations(const IvpElement& e, unsigned n, const EngineConfig& config = {});

/// Irreducibility in Int(Z). Non-members and units are not irreducible; a
/// non-image-primitive non-unit splits off its fixed divisor. Otherwise e is
/// reducible iff some proper split expo = v1 + v2 has
/// d(f^v1) * d(f^v2) = d(f^expo).
bool is_irreducible_ivp(const IvpElement& e);

IvpElement materialize(const std::vector<IntPoly>& basis, const Factor& factor);

/// Expands every factor and checks the product equals target^n exactly.
bool reconstructs_target(const FactorizationReport& report, const Factorization& fz);

/// True if every sub-multiset of factors sums to an exponent vector that is
/// constant on all indices except `distinguished` (the two-block form).
bool refines_to_two_block_form(const Factorization& fz, std::size_t distinguished);

}  // namespace ivplab
