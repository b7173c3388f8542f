#include <doctest.h>

#include <functional>

#include "ivplab/ffpoly.hpp"

using namespace ivplab;

namespace {

std::vector<FpPoly> all_monic(std::uint64_t p, int degree) {
  std::vector<FpPoly> out;
  std::vector<std::uint64_t> c(degree + 1, 0);
  c[degree] = 1;
  std::function<void(int)> rec = [&](int i) {
    if (i == degree) {
      out.emplace_back(p, c);
      return;
    }
    for (std::uint64_t v = 0; v < p; ++v) {
      c[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

// Exhaustive oracle: f is reducible iff some monic g with 1 <= deg g <= deg f / 2 divides it.
bool irreducible_by_search(const FpPoly& f) {
  for (int k = 1; 2 * k <= f.degree(); ++k)
    for (const auto& g : all_monic(f.modulus(), k))
      if (fp_rem(f, g).is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("reduction and arithmetic") {
  FpPoly a = reduce_mod(IntPoly{-1, 0, 3}, 3);
  CHECK(a == FpPoly(3, {2}));
  CHECK(fp_mul(FpPoly(2, {1, 1}), FpPoly(2, {1, 1})) == FpPoly(2, {1, 0, 1}));
  CHECK(fp_sub(FpPoly(5, {1}), FpPoly(5, {2})) == FpPoly(5, {4}));
  CHECK(fp_add(FpPoly(5, {1, 4}), FpPoly(5, {4, 1})).is_zero());
  CHECK(fp_monic(FpPoly(5, {1, 2})) == FpPoly(5, {3, 1}));
}

TEST_CASE("gcd_mod") {
  // (x + 1)^2 and x^2 - 1 over F_5 share x + 1
  FpPoly a(5, {1, 2, 1}), b(5, {4, 0, 1});
  CHECK(gcd_mod(a, b) == FpPoly(5, {1, 1}));
  CHECK(gcd_mod(FpPoly(5, {1, 2}), FpPoly(5, {})) == FpPoly(5, {3, 1}));
  CHECK_THROWS_AS(gcd_mod(FpPoly(3, {1, 1}), FpPoly(5, {1, 1})), std::invalid_argument);
}

TEST_CASE("is_irreducible_mod_p") {
  CHECK(is_irreducible_mod_p(FpPoly(2, {1, 1, 1})));
  CHECK_FALSE(is_irreducible_mod_p(FpPoly(2, {1, 0, 1})));
  CHECK(is_irreducible_mod_p(FpPoly(3, {1, 0, 1})));
  CHECK_FALSE(is_irreducible_mod_p(FpPoly(5, {1, 0, 1})));
  CHECK(is_irreducible_mod_p(FpPoly(2, {1, 1, 0, 0, 1})));
  CHECK_FALSE(is_irreducible_mod_p(FpPoly(2, {1, 0, 1, 0, 1})));  // (x^2+x+1)^2
  CHECK_THROWS_AS(is_irreducible_mod_p(FpPoly(3, {1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(is_irreducible_mod_p(FpPoly(3, {1})), std::invalid_argument);
}

TEST_CASE("property: Rabin agrees with exhaustive search over F2 and F3") {
  for (std::uint64_t p : {2u, 3u})
    for (int degree = 1; degree <= 4; ++degree)
      for (const auto& f : all_monic(p, degree)) CHECK(is_irreducible_mod_p(f) == irreducible_by_search(f));
}

TEST_CASE("property: Rabin agrees with exhaustive search over F5 up to degree 3") {
  for (int degree = 1; degree <= 3; ++degree)
    for (const auto& f : all_monic(5, degree)) CHECK(is_irreducible_mod_p(f) == irreducible_by_search(f));
}

TEST_CASE("taylor_shift and Eisenstein") {
  CHECK(taylor_shift(IntPoly{0, 0, 1}, 1) == IntPoly{1, 2, 1});
  CHECK(is_eisenstein(IntPoly{2, 2, 1}, 2));
  CHECK_FALSE(is_eisenstein(IntPoly{4, 2, 1}, 2));
  CHECK_FALSE(is_eisenstein(IntPoly{2, 1, 1}, 2));
  CHECK(is_eisenstein(IntPoly{1080, 1}, 5));
}

TEST_CASE("certify_irreducible_over_Q") {
  const std::vector<BigInt> none;
  auto c1 = certify_irreducible_over_Q(IntPoly{7, 1}, none);
  CHECK(c1.verdict == Verdict::Irreducible);
  CHECK(c1.method == CertMethod::DegreeOne);

  const std::vector<BigInt> hint{5};
  auto c2 = certify_irreducible_over_Q(IntPoly{5, 0, 5, 1}, hint);
  CHECK(c2.verdict == Verdict::Irreducible);
  CHECK(c2.method == CertMethod::Eisenstein);
  CHECK(c2.prime == 5);

  // x^2 + x + 1 is Eisenstein at 3 after x -> x + 1
  const std::vector<BigInt> hint3{3};
  auto c3 = certify_irreducible_over_Q(IntPoly{1, 1, 1}, hint3);
  CHECK(c3.verdict == Verdict::Irreducible);

  auto c4 = certify_irreducible_over_Q(IntPoly{1, 0, 1}, none);
  CHECK(c4.verdict == Verdict::Irreducible);
  CHECK(c4.method == CertMethod::ModP);

  auto c5 = certify_irreducible_over_Q(IntPoly{-1, 0, 1}, none);
  CHECK(c5.verdict == Verdict::Reducible);
  REQUIRE(c5.rational_root.has_value());
  CHECK(eval(IntPoly{-1, 0, 1}, *c5.rational_root) == 0);

  // x^4 + 1 is irreducible but reducible modulo every prime; nothing here proves it.
  auto c6 = certify_irreducible_over_Q(IntPoly{1, 0, 0, 0, 1}, none);
  CHECK(c6.verdict == Verdict::Unverified);
}
