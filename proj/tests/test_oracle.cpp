#include <doctest.h>

#include "generators.hpp"
#include "ivplab/construct.hpp"
#include "ivplab/engine.hpp"
#include "ivplab/errors.hpp"
#include "ivplab/oracle.hpp"

using namespace ivplab;

TEST_CASE("sampled helpers") {
  OracleConfig cfg;
  CHECK(sampled_fixed_divisor(IntPoly{0, 1, 1}, cfg) == 2);
  CHECK(sampled_integer_valuedness(IntPoly{0, -1, 1}, 2, cfg));
  CHECK_FALSE(sampled_integer_valuedness(IntPoly{0, 1}, 2, cfg));
  cfg.sample_radius = 1;
  CHECK_THROWS_AS(sampled_fixed_divisor(IntPoly{0, 0, 0, 1}, cfg), std::invalid_argument);
}

TEST_CASE("oracle rejects non-image-primitive input") {
  IvpElement e{{IntPoly{0, 1}, IntPoly{-1, 1}}, {1, 1}, 1, 1};
  CHECK_THROWS_AS(brute_force_factorizations(e, 1), std::invalid_argument);
}

TEST_CASE("oracle node cap") {
  auto w = construct_F({3, 2});
  OracleConfig cfg;
  cfg.max_nodes = 5;
  CHECK_THROWS_AS(brute_force_factorizations(w.F, 3, cfg), BudgetExceeded);
}

TEST_CASE("engine matches oracle on the witness family") {
  for (auto [N, p] : std::vector<std::pair<unsigned, int>>{{2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}}) {
    auto w = construct_F({N, p});
    OracleConfig cfg;
    cfg.sample_radius = std::max(10u, N * w.d());
    for (unsigned n = 1; n <= N; ++n) {
      CAPTURE(N);
      CAPTURE(p);
      CAPTURE(n);
      auto o = brute_force_factorizations(w.F, n, cfg);
      auto r = count_essential_factorizations(w.F, n);
      CHECK(o.classes == classes_of(r));
      CHECK(o.count() == (n < N ? 1u : 2u));
    }
  }
}

TEST_CASE("property: engine matches oracle on random elements") {
  for (int trial = 0; trial < 150; ++trial) {
    auto e = ivplab::testing::random_image_primitive(3, 2);
    const unsigned n = static_cast<unsigned>(ivplab::testing::uniform(1, 2));
    CAPTURE(to_string(numerator(e)));
    CAPTURE(e.denom);
    CAPTURE(n);
    OracleConfig cfg;
    cfg.sample_radius = std::max(10u, n * static_cast<unsigned>(numerator(e).degree()));
    auto o = brute_force_factorizations(e, n, cfg);
    auto r = count_essential_factorizations(e, n);
    CHECK(o.classes == classes_of(r));
    for (const auto& fz : r.factorizations) CHECK(reconstructs_target(r, fz));
  }
}
