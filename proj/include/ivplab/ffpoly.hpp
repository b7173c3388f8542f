#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ivplab/bigint.hpp"
#include "ivplab/poly.hpp"

namespace ivplab {

/// Polynomial over F_p for a 64-bit prime p; coefficients reduced into
/// [0, p-1], ascending degree, no trailing zeros.
class FpPoly {
 public:
  FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);
  static FpPoly x(std::uint64_t p);
  static FpPoly one(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  friend bool operator==(const FpPoly&, const FpPoly&) = default;

 private:
  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

FpPoly reduce_mod(const IntPoly& f, const BigInt& p);

FpPoly fp_add(const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b);
/// Remainder of a modulo b (b != 0).
FpPoly fp_rem(const FpPoly& a, const FpPoly& b);
FpPoly fp_monic(const FpPoly& a);

/// Monic gcd; gcd(a, 0) = monic(a). Throws std::invalid_argument when the
/// moduli differ.
FpPoly gcd_mod(const FpPoly& a, const FpPoly& b);

/// Rabin's irreducibility test. Requires f monic with deg f >= 1.
bool is_irreducible_mod_p(const FpPoly& f);

enum class Verdict { Irreducible, Reducible, Unverified };
enum class CertMethod { DegreeOne, ModP, Eisenstein, None };

struct IrreducibilityCertificate {
  Verdict verdict = Verdict::Unverified;
  CertMethod method = CertMethod::None;
  std::uint64_t prime = 0;             // MOD_P / EISENSTEIN
  BigInt shift = 0;                    // EISENSTEIN applies to f(x + shift)
  std::optional<BigInt> rational_root;  // REDUCIBLE witness

  std::string describe() const;
};

std::string to_string(Verdict v);
std::string to_string(CertMethod m);

/// f(x + s).
IntPoly taylor_shift(const IntPoly& f, const BigInt& s);

/// Eisenstein at p for f itself: p divides every non-leading coefficient,
/// not the leading one, and p^2 does not divide the constant term.
bool is_eisenstein(const IntPoly& f, const BigInt& p);

struct CertifyOptions {
  std::uint64_t scan_bound = 50;  // small primes tried for MOD_P
  std::uint64_t max_shift = 32;   // Eisenstein shifts tried per hint prime
};

/// Irreducibility over Q for monic f. Order of attempts: degree one,
/// Eisenstein at the hint primes, irreducibility modulo the hint primes,
/// then modulo the primes up to scan_bound. REDUCIBLE is only returned with
/// an integer root for deg <= 3.
IrreducibilityCertificate certify_irreducible_over_Q(const IntPoly& f,
                                                     std::span<const BigInt> hint_primes,
                                                     const CertifyOptions& options = {});

}  // namespace ivplab
