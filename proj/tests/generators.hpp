#pragma once

#include <algorithm>
#include <random>

#include "ivplab/element.hpp"
#include "ivplab/padic.hpp"
#include "ivplab/poly.hpp"

namespace ivplab::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240917);
  return engine;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline IntPoly random_poly(int max_degree, long bound) {
  const long degree = uniform(0, max_degree);
  std::vector<BigInt> c;
  for (long i = 0; i <= degree; ++i) c.emplace_back(uniform(-bound, bound));
  return IntPoly(std::move(c));
}

inline IntPoly random_nonzero_poly(int max_degree, long bound) {
  IntPoly f;
  while (f.is_zero()) f = random_poly(max_degree, bound);
  return f;
}

// Image-primitive element over 1..max_basis distinct monic polynomials drawn
// from x - c (0 <= c <= 4), x^2 + 1 and x^2 + x + 2, exponents in 1..max_expo.
// The denominator is the fixed divisor of the numerator, so it stays small.
inline IvpElement random_image_primitive(std::size_t max_basis, unsigned max_expo) {
  std::vector<IntPoly> pool;
  for (long c = 0; c <= 4; ++c) pool.push_back(IntPoly{-c, 1});
  pool.push_back(IntPoly{1, 0, 1});
  pool.push_back(IntPoly{2, 1, 1});
  std::shuffle(pool.begin(), pool.end(), rng());
  IvpElement e;
  const long k = uniform(1, static_cast<long>(max_basis));
  for (long i = 0; i < k; ++i) {
    e.basis.push_back(pool[static_cast<std::size_t>(i)]);
    e.expo.push_back(static_cast<unsigned>(uniform(1, max_expo)));
  }
  e.denom = fixed_divisor(numerator(e));
  return e;
}

}  // namespace ivplab::testing
