#include <doctest.h>

#include <algorithm>
#include <random>

#include "arrzeta/affine_form.hpp"
#include "arrzeta/fixtures.hpp"
#include "arrzeta/harness.hpp"
#include "arrzeta/linalg.hpp"
#include "arrzeta/poly.hpp"
#include "arrzeta/vmono.hpp"
#include "arrzeta/walls.hpp"
#include "arrzeta/zeta.hpp"
#include "support.hpp"

using namespace arrzeta;
using testing::ints;
using testing::Q;
using testing::random_rational;
using testing::rats;

namespace {

MultiPoly random_poly(std::mt19937& rng, std::size_t vars, int terms, unsigned max_deg) {
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  MultiPoly p(vars);
  for (int t = 0; t < terms; ++t) {
    MultiPoly::Exponent e(vars);
    for (auto& x : e) x = deg(rng);
    p.add_term(e, random_rational(rng, 9, 4));
  }
  return p;
}

std::vector<Arrangement> fixture_arrangements() {
  std::vector<Arrangement> out{testing::xy(),          testing::three_lines(), testing::monomial(2, 3),
                               testing::xyz(),         testing::xy_in_c3(),    fixtures::veys(),
                               fixtures::two_factor(), testing::coordinate_factors_xy()};
  out.push_back(Arrangement::reduced(3, {ints({1, 0, 0}), ints({0, 1, 0}), ints({0, 0, 1}), ints({1, 1, 1})}));
  out.push_back(Arrangement::central(3, {ints({1, 0, 0}), ints({0, 1, 0}), ints({1, 1, 0}), ints({0, 0, 1})},
                                     {1, 2, 1, 3}));
  out.push_back(Arrangement::reduced(3, {ints({1, 0, 0}), ints({0, 1, 0}), ints({0, 0, 1}), ints({1, -1, 0}),
                                         ints({0, 1, -1}), ints({1, 0, -1})}));
  return out;
}

std::vector<Arrangement> random_arrangements(unsigned seed, int count) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dim(2, 3), size(1, 6);
  std::vector<Arrangement> out;
  for (int k = 0; k < count; ++k) {
    std::size_t n = dim(rng);
    out.push_back(testing::random_central(rng, n, size(rng), 3));
  }
  return out;
}

// Whitney: mu(X) = sum over subsets S with closure(S) = X of (-1)^|S|.
long whitney_mobius(const Arrangement& arr, const IndexSet& target) {
  long mu = 0;
  const std::size_t r = arr.size();
  for (unsigned long mask = 0; mask < (1UL << r); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < r; ++i) {
      if ((mask >> i) & 1UL) s.push_back(i);
    }
    if (closure(arr, s).indices == target) mu += (s.size() % 2 ? -1 : 1);
  }
  return mu;
}

bool split_by_bipartition(const Arrangement& arr) {
  const std::size_t r = arr.size();
  std::size_t total = arr.rank();
  for (unsigned long mask = 1; mask + 1 < (1UL << r); ++mask) {
    std::vector<std::size_t> a, b;
    for (std::size_t i = 0; i < r; ++i) ((mask >> i) & 1UL ? a : b).push_back(i);
    if (arr.rank(a) + arr.rank(b) == total) return true;
  }
  return false;
}

bool is_subset(const IndexSet& a, const IndexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

RVector random_point(std::mt19937& rng, std::size_t n) {
  RVector p;
  for (std::size_t i = 0; i < n; ++i) p.push_back(random_rational(rng, 30, 7));
  return p;
}

}  // namespace

TEST_CASE("rank plus nullity equals the column count") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t rows = dim(rng), cols = dim(rng);
    std::vector<RVector> m;
    for (std::size_t i = 0; i < rows; ++i) {
      RVector row;
      for (std::size_t j = 0; j < cols; ++j) row.push_back(trial % 3 == 0 ? Rational(j % 2) : random_rational(rng, 3, 2));
      m.push_back(row);
    }
    QMatrix q = QMatrix::from_rows(m, cols);
    auto kernel = kernel_basis(q);
    CHECK(rank(q) + kernel.size() == cols);
    for (const auto& v : kernel) {
      for (const auto& row : m) CHECK(dot(row, v) == 0);
    }
  }
}

TEST_CASE("divides_linear detects exact multiples") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t vars = 1 + trial % 3;
    MultiPoly p = random_poly(rng, vars, 4, 3);
    std::uniform_int_distribution<int> c(-4, 4);
    AffineForm l;
    for (std::size_t i = 0; i < vars; ++i) l.coeffs.push_back(c(rng));
    l.constant = c(rng);
    if (l.is_constant()) l.coeffs[0] = 1;
    MultiPoly prod = l.to_poly() * p;
    CHECK(divides_linear(l, prod));
    Rational shift = random_rational(rng);
    if (shift == 0) shift = 1;
    CHECK_FALSE(divides_linear(l, prod + MultiPoly::constant(vars, shift)));
    if (!p.is_zero()) CHECK(divide_linear(prod, l) == p);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t vars = 1 + trial % 3;
    MultiPoly p = random_poly(rng, vars, 4, 3), q = random_poly(rng, vars, 3, 2);
    RVector pt = random_point(rng, vars);
    CHECK((p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt));
    CHECK((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt));
  }
}

TEST_CASE("lattice invariants on fixtures and random arrangements") {
  auto all = fixture_arrangements();
  for (auto& a : random_arrangements(21, 40)) all.push_back(a);
  for (const auto& arr : all) {
    IntersectionLattice lat(arr);
    for (std::size_t x = 0; x < lat.size(); ++x) {
      CHECK(lat.mobius(x) == whitney_mobius(arr, lat.flat(x).indices));
      if (x == 0) continue;
      long sum = 0;
      for (std::size_t y = 0; y < lat.size(); ++y) {
        if (lat.leq(y, x)) sum += lat.mobius(y);
      }
      CHECK(sum == 0);
    }
    MultiPoly chi = char_poly(arr);
    CHECK(chi.evaluate(ints({1})) == 0);
    CHECK(divides_linear(AffineForm{{1}, -1}, chi));

    CHECK(is_indecomposable(arr) == (arr.size() == 1 || !split_by_bipartition(arr)));

    auto dense = dense_edges(arr, lat);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      CHECK(std::any_of(dense.begin(), dense.end(), [&](const Flat& f) { return f.indices == IndexSet{i}; }));
    }
    bool has_origin = false;
    for (const auto& f : dense) has_origin = has_origin || f.codim == arr.dimension();
    CHECK(has_origin == (is_essential(arr) && is_indecomposable(arr)));

    for (std::size_t a = 0; a < lat.size(); ++a) {
      for (std::size_t b = 0; b < lat.size(); ++b) {
        if (a != b && lat.leq(b, a)) CHECK_FALSE(interval_arrangement(arr, lat.flat(a), lat.flat(b)).empty());
      }
    }
  }
}

TEST_CASE("closure is a closure operator") {
  for (const auto& arr : fixture_arrangements()) {
    const std::size_t r = arr.size();
    for (unsigned long s = 0; s < (1UL << r); ++s) {
      std::vector<std::size_t> set;
      for (std::size_t i = 0; i < r; ++i) {
        if ((s >> i) & 1UL) set.push_back(i);
      }
      IndexSet c = closure(arr, set).indices;
      CHECK(is_subset(set, c));
      CHECK(closure(arr, c).indices == c);
      for (unsigned long t = s; t < (1UL << r); t = (t + 1) | s) {
        std::vector<std::size_t> sup;
        for (std::size_t i = 0; i < r; ++i) {
          if ((t >> i) & 1UL) sup.push_back(i);
        }
        CHECK(is_subset(c, closure(arr, sup).indices));
      }
    }
  }
}

TEST_CASE("direct sums are decomposable") {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    Arrangement a = testing::random_central(rng, 2, 3, 1);
    Arrangement b = testing::random_central(rng, 1 + trial % 2, 1 + trial % 2, 1);
    std::vector<RVector> normals;
    const std::size_t n = a.dimension() + b.dimension();
    for (std::size_t i = 0; i < a.size(); ++i) {
      RVector v(n, Rational(0));
      std::copy(a.normal(i).begin(), a.normal(i).end(), v.begin());
      normals.push_back(v);
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
      RVector v(n, Rational(0));
      std::copy(b.normal(i).begin(), b.normal(i).end(), v.begin() + a.dimension());
      normals.push_back(v);
    }
    CHECK_FALSE(is_indecomposable(Arrangement::reduced(n, normals)));
  }
}

TEST_CASE("zeta functions agree with their term sums and are proper") {
  std::mt19937 rng(31);
  auto all = fixture_arrangements();
  for (auto& a : random_arrangements(32, 12)) all.push_back(a);
  for (const auto& arr : all) {
    std::vector<ZetaFunction> zs{local_zeta(arr), global_zeta(arr)};
    if (arr.has_factors()) zs.push_back(multivariate_local_zeta(arr));
    for (const auto& z : zs) {
      if (!z.is_zero()) CHECK(z.numerator.total_degree() < z.denominator_degree());
      int checked = 0;
      while (checked < 20) {
        RVector pt = random_point(rng, z.variables);
        bool avoids = true;
        for (const auto& t : z.terms) {
          for (const auto& f : t.denominator) avoids = avoids && f.evaluate(pt) != 0;
        }
        if (!avoids) continue;
        CHECK(z.evaluate_terms(pt) == z.evaluate_normalized(pt));
        ++checked;
      }
    }
  }
}

TEST_CASE("poles stay among the dense-edge candidates") {
  auto all = fixture_arrangements();
  for (auto& a : random_arrangements(33, 15)) all.push_back(a);
  for (const auto& arr : all) {
    auto cands = candidate_poles(arr);
    for (const auto& p : pole_values(local_zeta(arr))) {
      CHECK(std::find(cands.begin(), cands.end(), p) != cands.end());
    }
  }
}

TEST_CASE("local zeta matches the one-blowup formula for line arrangements") {
  std::mt19937 rng(34);
  std::uniform_int_distribution<int> size(3, 6);
  for (int trial = 0; trial < 10; ++trial) {
    Arrangement arr = testing::random_central(rng, 2, size(rng), 4);
    CHECK(same_function(local_zeta(arr), rank2_zeta(arr)));
  }
}

TEST_CASE("specialization of the multivariate zeta function") {
  std::mt19937 rng(35);
  std::uniform_int_distribution<int> size(2, 4), split(0, 2);
  for (int trial = 0; trial < 8; ++trial) {
    Arrangement base = testing::random_central(rng, 2 + trial % 2, size(rng), 3);
    FactorMatrix d(2, std::vector<int>(base.size(), 0));
    for (std::size_t i = 0; i < base.size(); ++i) {
      int m = base.multiplicity(i);
      int first = std::min(m, split(rng));
      d[0][i] = first;
      d[1][i] = m - first;
    }
    std::vector<RVector> normals;
    std::vector<int> mults;
    for (std::size_t i = 0; i < base.size(); ++i) {
      normals.push_back(base.normal(i));
      mults.push_back(base.multiplicity(i));
    }
    Arrangement f = Arrangement::central(base.dimension(), normals, mults, d);
    std::vector<long> ones{1, 1};
    CHECK(same_function(specialize(multivariate_local_zeta(f), ones), local_zeta(base)));
  }
}

TEST_CASE("wall and chamber properties") {
  std::mt19937 rng(41);
  std::vector<WallSet> sets{extend_restricted_walls(vmono::diag_restricted_walls()),
                            walls_from_resolution({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}),
                            walls_from_resolution({{2, 1}, {0, 3}, {1, 1}})};
  for (const auto& ws : sets) {
    const std::size_t r = ws.dimension();
    for (int trial = 0; trial < 60; ++trial) {
      RVector p = random_point(rng, r);
      auto local = localized_walls(ws, p);
      for (const auto& f : ws.families()) {
        Rational v = f.value(p);
        bool listed = std::find(local.begin(), local.end(), WallInstance{f.normal, v}) != local.end();
        CHECK(listed == f.contains_level(v));
      }

      RVector a = random_point(rng, r), c = random_point(rng, r);
      auto ab = separating_walls(ws, a, c), ba = separating_walls(ws, c, a);
      std::sort(ab.begin(), ab.end());
      std::sort(ba.begin(), ba.end());
      CHECK(ab == ba);

      Rational t = make_rational(1 + trial % 5, 7);
      RVector b(r);
      for (std::size_t i = 0; i < r; ++i) b[i] = a[i] + t * (c[i] - a[i]);
      if (!on_some_wall(ws, a) && !on_some_wall(ws, b) && !on_some_wall(ws, c)) {
        auto left = separating_walls(ws, a, b), right = separating_walls(ws, b, c);
        left.insert(left.end(), right.begin(), right.end());
        std::sort(left.begin(), left.end());
        CHECK(left == ab);
      }
      if (!on_some_wall(ws, a) && !on_some_wall(ws, c) && a != c) {
        CHECK(chamber_path(ws, a, c).walls.size() == ab.size());
      }
    }
  }
}

TEST_CASE("normal crossings generator properties") {
  std::mt19937 rng(51);
  vmono::MonomialConnectionSpec spec{rats({"1/2", "-1/3"})};
  WallSet ws = vmono::ncv_walls(spec);
  for (int trial = 0; trial < 100; ++trial) {
    RVector alpha = random_point(rng, 2);
    auto g = vmono::ncv_generator(spec, alpha);
    for (std::size_t i = 0; i < 2; ++i) {
      if (alpha[i] <= spec.beta[i]) continue;
      RVector shifted = alpha;
      shifted[i] += 1;
      auto h = vmono::ncv_generator(spec, shifted);
      auto expected = g;
      expected[i] += 1;
      CHECK(h == expected);
    }
    RVector other = random_point(rng, 2);
    if (same_chamber(ws, alpha, other) && same_chamber(ws, other, alpha)) {
      CHECK(vmono::ncv_generator(spec, other) == g);
    }
  }
}

TEST_CASE("diagonal membership is monotone") {
  std::mt19937 rng(52);
  std::uniform_int_distribution<int> small(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    vmono::DiagClass c{small(rng), small(rng), 1 + small(rng)};
    RVector alpha = random_point(rng, 2);
    RVector lower{alpha[0] - make_rational(small(rng), 3), alpha[1] - make_rational(small(rng), 5)};
    if (vmono::diag_vres_member(c, alpha)) CHECK(vmono::diag_vres_member(c, lower));
  }
}

TEST_CASE("harness properties") {
  auto all = fixture_arrangements();
  for (const auto& arr : all) {
    // lct is the largest c with c * (d_1, ..., d_r) in the closed polytope
    Polytope poly = log_canonical_polytope(arr);
    Rational c = lct(arr);
    RVector at(arr.size()), beyond(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
      at[i] = c * arr.multiplicity(i);
      beyond[i] = (c + make_rational(1, 1000)) * arr.multiplicity(i);
    }
    CHECK(polytope_member(poly, at, false));
    CHECK_FALSE(polytope_member(poly, beyond, false));

    if (!is_essential(arr) || !is_indecomposable(arr)) continue;
    CHECK(validate_adapted(arr, adapted_vector(arr)).pass);
    NdReport nd = nd_check(arr);
    auto cands = candidate_poles(arr);
    CHECK(std::find(cands.begin(), cands.end(), nd.ratio) != cands.end());

    auto poles = pole_values(local_zeta(arr));
    std::vector<Rational> roots = poles;
    if (roots.empty()) roots.push_back(Rational(-1));
    CHECK(smc_verify(arr, roots, true).verdict.pass);
    roots.push_back(Q("-5/11"));
    CHECK(smc_verify(arr, roots, true).verdict.pass);
  }
}

TEST_CASE("multivariate verdicts specialize to univariate ones") {
  Arrangement f = fixtures::two_factor();
  std::vector<AffineForm> locus{{{1, 0}, 1}, {{0, 1}, 1}, {{1, 2}, 2}};
  REQUIRE(multi_smc_verify(f, locus).verdict.pass);
  std::vector<Rational> roots;
  for (const auto& l : locus) roots.push_back(make_rational(-l.constant, l.coeffs[0] + l.coeffs[1]));
  CHECK(smc_verify(testing::three_lines(), roots, false).verdict.pass);
}
