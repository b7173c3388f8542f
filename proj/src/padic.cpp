#include "ivplab/padic.hpp"

#include <algorithm>
#include <stdexcept>

#include "ivplab/errors.hpp"

namespace ivplab {

unsigned long Valuation::value() const {
  if (!value_) throw std::logic_error("value() of infinite valuation");
  return *value_;
}

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) return Valuation::infinity();
  return Valuation(*a.value_ + *b.value_);
}

std::string to_string(const Valuation& v) {
  return v.is_infinite() ? std::string("inf") : std::to_string(v.value());
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // These bases are a deterministic witness set for all n < 2^64.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const BigInt& n) {
  if (sgn(n) <= 0) return false;
  if (!fits_u64(n)) throw std::invalid_argument("primality test limited to 64-bit candidates");
  return is_prime_u64(to_u64(n));
}

std::vector<u64> primes_up_to(u64 bound) {
  std::vector<u64> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (u64 i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

u64 next_prime(u64 n) {
  u64 c = n + 1;
  while (!is_prime_u64(c)) ++c;
  return c;
}

Valuation vp(const BigInt& n, const BigInt& p) {
  if (!is_prime(p)) throw std::invalid_argument("vp: " + p.get_str() + " is not prime");
  if (sgn(n) == 0) return Valuation::infinity();
  BigInt rest;
  auto k = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  return Valuation(k);
}

BigInt fixed_divisor(const IntPoly& f) {
  if (f.is_zero()) return 0;
  BigInt g = 0;
  for (int a = 0; a <= f.degree(); ++a) {
    BigInt value = eval(f, BigInt(a));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), value.get_mpz_t());
  }
  return g;
}

Valuation vp_fixed_divisor(const IntPoly& f, const BigInt& p) {
  if (f.is_zero()) throw std::invalid_argument("vp_fixed_divisor of the zero polynomial");
  return vp(fixed_divisor(f), p);
}

std::vector<std::pair<BigInt, unsigned>> factor_small(const BigInt& n) {
  if (sgn(n) == 0) throw std::invalid_argument("factor_small(0)");
  std::vector<std::pair<BigInt, unsigned>> out;
  BigInt rest = abs(n);
  for (unsigned long d = 2; d <= 1'000'000UL; ++d) {
    if (rest == 1) break;
    BigInt dd = d;
    if (dd * dd > rest) break;
    unsigned k = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
      ++k;
    }
    if (k > 0) out.emplace_back(dd, k);
  }
  if (rest != 1) {
    if (!is_prime(rest)) throw std::invalid_argument("factor_small: cofactor " + rest.get_str() + " not factored");
    out.emplace_back(rest, 1);
  }
  return out;
}

std::vector<BigInt> primes_dividing_fixed_divisor(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("primes_dividing_fixed_divisor of the zero polynomial");
  BigInt d = fixed_divisor(f);
  BigInt c = content(f);
  std::vector<BigInt> primes;
  // Primes outside the content are bounded by the degree.
  for (u64 p : primes_up_to(static_cast<u64>(std::max(f.degree(), 0))))
    if (mpz_divisible_ui_p(d.get_mpz_t(), p)) primes.emplace_back(from_u64(p));
  if (c != 1)
    for (auto& [p, k] : factor_small(c)) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  BigInt rest = d;
  for (const auto& p : primes) mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
  if (rest != 1) throw InvariantViolation("fixed divisor has a prime above deg f outside the content");
  return primes;
}

bool is_square_free(const BigInt& n) {
  return std::ranges::all_of(factor_small(n), [](const auto& pk) { return pk.second == 1; });
}

}  // namespace ivplab
