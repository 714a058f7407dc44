#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "arrzeta/arrangement.hpp"
#include "arrzeta/linalg.hpp"
#include "arrzeta/rational.hpp"

namespace testing {

using namespace arrzeta;

inline Rational Q(const std::string& text) { return parse_rational(text); }

inline RVector ints(std::initializer_list<long> xs) {
  RVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline RVector rats(std::initializer_list<const char*> xs) {
  RVector v;
  for (const char* x : xs) v.push_back(parse_rational(x));
  return v;
}

inline Arrangement xy() { return Arrangement::reduced(2, {ints({1, 0}), ints({0, 1})}); }

inline Arrangement xy_in_c3() { return Arrangement::reduced(3, {ints({1, 0, 0}), ints({0, 1, 0})}); }

inline Arrangement xyz() { return Arrangement::reduced(3, {ints({1, 0, 0}), ints({0, 1, 0}), ints({0, 0, 1})}); }

inline Arrangement monomial(int a, int b) { return Arrangement::central(2, {ints({1, 0}), ints({0, 1})}, {a, b}); }

inline Arrangement three_lines() { return Arrangement::reduced(2, {ints({1, 0}), ints({0, 1}), ints({1, -1})}); }

inline Arrangement coordinate_factors_xy() {
  return Arrangement::central(2, {ints({1, 0}), ints({0, 1})}, {1, 1}, FactorMatrix{{1, 0}, {0, 1}});
}

// Random integer normal in [-bound, bound]^n, nonzero.
inline RVector random_normal(std::mt19937& rng, std::size_t n, int bound) {
  std::uniform_int_distribution<int> coeff(-bound, bound);
  for (;;) {
    RVector v;
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
      v.emplace_back(coeff(rng));
      nonzero = nonzero || v.back() != 0;
    }
    if (nonzero) return v;
  }
}

// Random central arrangement of r pairwise non-proportional hyperplanes.
inline Arrangement random_central(std::mt19937& rng, std::size_t n, std::size_t r, int max_mult, int bound = 3) {
  std::vector<RVector> normals;
  std::vector<ZVector> seen;
  while (normals.size() < r) {
    RVector v = random_normal(rng, n, bound);
    ZVector p = primitive_normal(v);
    bool dup = false;
    for (const auto& s : seen) dup = dup || s == p;
    if (dup) continue;
    seen.push_back(p);
    normals.push_back(v);
  }
  std::uniform_int_distribution<int> mult(1, max_mult);
  std::vector<int> mults;
  for (std::size_t i = 0; i < r; ++i) mults.push_back(mult(rng));
  return Arrangement::central(n, std::move(normals), std::move(mults));
}

inline Rational random_rational(std::mt19937& rng, int num_bound = 20, int den_bound = 9) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound);
  std::uniform_int_distribution<int> den(1, den_bound);
  return make_rational(num(rng), den(rng));
}

}  // namespace testing
