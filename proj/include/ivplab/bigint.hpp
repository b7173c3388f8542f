#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ivplab {

using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& n) { return n.get_str(10); }

// Strict decimal parse: optional leading '-', digits only.
std::optional<BigInt> parse_decimal(std::string_view text);

inline bool fits_u64(const BigInt& n) {
  return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const BigInt& n) {
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, n.get_mpz_t());
  return out;
}

inline BigInt from_u64(std::uint64_t v) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

inline BigInt pow(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

}  // namespace ivplab
