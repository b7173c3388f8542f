#include <doctest.h>

#include "generators.hpp"
#include "ivplab/poly.hpp"

using namespace ivplab;
using ivplab::testing::random_nonzero_poly;
using ivplab::testing::random_poly;
using ivplab::testing::uniform;

TEST_CASE("zero polynomial is the empty sequence") {
  IntPoly z{0, 0, 0};
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(z.coeffs().empty());
  CHECK(IntPoly{1, 2, 0}.degree() == 1);
}

TEST_CASE("add") {
  const IntPoly x{0, 1};
  CHECK((x + -x).is_zero());
  CHECK(add(IntPoly{1, 1}, IntPoly{-1, 1}) == IntPoly{0, 2});
  CHECK(add(IntPoly{0, 0, 1}, IntPoly{1}) == IntPoly{1, 0, 1});
}

TEST_CASE("mul") {
  CHECK(mul(IntPoly{0, 1}, IntPoly{-1, 1}) == IntPoly{0, -1, 1});
  CHECK(mul(IntPoly{-1, 1}, IntPoly{-1, 1}) == IntPoly{1, -2, 1});
  CHECK(mul(IntPoly{3, 4, 5}, IntPoly{}).is_zero());
}

TEST_CASE("pow") {
  CHECK(pow(IntPoly{-1, 1}, 2) == IntPoly{1, -2, 1});
  CHECK(pow(IntPoly{7, 0, 3}, 0) == IntPoly{1});
  CHECK(pow(IntPoly{0, 1}, 3) == IntPoly{0, 0, 0, 1});
}

TEST_CASE("eval") {
  CHECK(eval(IntPoly{0, -1, 1}, 3) == 6);
  CHECK(eval(IntPoly{}, 17) == 0);
  CHECK(eval(IntPoly{1, -2, 1}, 3) == 4);
}

TEST_CASE("content") {
  CHECK(content(IntPoly{4, 0, 2}) == 2);
  CHECK(content(IntPoly{1080, 1}) == 1);
  CHECK(content(IntPoly{0, 9, 0, 6}) == 3);
  CHECK(content(IntPoly{0, -4}) == 4);
  CHECK_THROWS_AS(content(IntPoly{}), std::invalid_argument);
}

TEST_CASE("to_string") {
  CHECK(to_string(IntPoly{1, -2, 1}) == "x^2 - 2*x + 1");
  CHECK(to_string(IntPoly{1080, 1}) == "x + 1080");
  CHECK(to_string(IntPoly{}) == "0");
  CHECK(to_string(IntPoly{0, -1}) == "-x");
}

TEST_CASE("ordering is by degree first") {
  CHECK(IntPoly{5, 1} < IntPoly{0, 0, 1});
  CHECK(IntPoly{-3, 1} < IntPoly{2, 1});
}

TEST_CASE("ring axioms on random polynomials") {
  for (int trial = 0; trial < 300; ++trial) {
    IntPoly a = random_poly(6, 30), b = random_poly(6, 30), c = random_poly(6, 30);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
  }
}

TEST_CASE("eval is a ring homomorphism") {
  for (int trial = 0; trial < 300; ++trial) {
    IntPoly a = random_poly(6, 30), b = random_poly(6, 30);
    BigInt t = uniform(-50, 50);
    CHECK(eval(a * b, t) == eval(a, t) * eval(b, t));
    CHECK(eval(a + b, t) == eval(a, t) + eval(b, t));
  }
}

TEST_CASE("content is multiplicative (Gauss)") {
  for (int trial = 0; trial < 300; ++trial) {
    IntPoly a = random_nonzero_poly(5, 40), b = random_nonzero_poly(5, 40);
    CHECK(content(a * b) == content(a) * content(b));
  }
}
