#include <doctest.h>

#include "arrzeta/error.hpp"
#include "arrzeta/fixtures.hpp"
#include "arrzeta/harness.hpp"
#include "support.hpp"

using namespace arrzeta;
using testing::ints;
using testing::Q;
using testing::rats;

namespace {

bool has_clause(const Verdict& v, const std::string& clause) {
  for (const auto& w : v.witnesses) {
    if (w.clause == clause) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("log canonical thresholds") {
  CHECK(lct(testing::monomial(2, 3)) == Q("1/3"));
  CHECK(lct(testing::three_lines()) == Q("2/3"));
  CHECK(lct(fixtures::veys()) == Q("1/4"));
}

TEST_CASE("log canonical polytopes") {
  Polytope lines = log_canonical_polytope(testing::three_lines());
  REQUIRE(lines.inequalities.size() == 4);
  CHECK(lines.inequalities.back().indices == IndexSet{0, 1, 2});
  CHECK(lines.inequalities.back().bound == 2);
  CHECK(log_canonical_polytope(testing::xy()).inequalities.size() == 2);
  CHECK(log_canonical_polytope(fixtures::veys()).inequalities.size() == 8);
}

TEST_CASE("polytope membership") {
  Polytope lines = log_canonical_polytope(testing::three_lines());
  CHECK(polytope_member(lines, rats({"2/3", "2/3", "2/3"}), false));
  CHECK_FALSE(polytope_member(lines, rats({"2/3", "2/3", "2/3"}), true));
  CHECK_FALSE(polytope_member(lines, ints({1, 1, 1}), false));
  CHECK(polytope_member(log_canonical_polytope(testing::xy()), ints({1, 1}), false));
  CHECK_THROWS_AS(polytope_member(lines, ints({0, 1, 1}), false), Error);
}

TEST_CASE("validate adapted vectors") {
  CHECK(validate_adapted(testing::three_lines(), rats({"2/3", "2/3", "2/3"})).pass);
  Verdict bad = validate_adapted(testing::three_lines(), rats({"1", "1/2", "1/2"}));
  CHECK_FALSE(bad.pass);
  CHECK(has_clause(bad, "integral sum at dense hyperplane"));
  CHECK(validate_adapted(fixtures::veys(), rats({"3/5", "3/5", "3/5", "3/5", "3/5"})).pass);
  CHECK(has_clause(validate_adapted(testing::three_lines(), rats({"1/2", "1/2", "1/2"})), "sum differs from n"));
}

TEST_CASE("adapted vectors") {
  RVector lines = adapted_vector(testing::three_lines());
  CHECK(validate_adapted(testing::three_lines(), lines).pass);
  RVector veys = adapted_vector(fixtures::veys());
  CHECK(validate_adapted(fixtures::veys(), veys).pass);
  CHECK_THROWS_WITH_AS(adapted_vector(testing::xy()), doctest::Contains("decomposable"), Error);
}

TEST_CASE("n/d reports") {
  NdReport veys = nd_check(fixtures::veys());
  CHECK(veys.n == 3);
  CHECK(veys.d == 9);
  CHECK(veys.ratio == Q("-1/3"));
  CHECK(veys.is_candidate);
  CHECK_FALSE(veys.is_local_pole);
  CHECK(veys.verdict.pass);
  NdReport lines = nd_check(testing::three_lines());
  CHECK(lines.ratio == Q("-2/3"));
  CHECK(lines.is_local_pole);
  CHECK_THROWS_WITH_AS(nd_check(testing::monomial(2, 3)), doctest::Contains("decomposable"), Error);
}

TEST_CASE("strong monodromy verdicts") {
  CHECK(smc_verify(fixtures::veys(), fixtures::veys_bf_roots(), true).verdict.pass);
  CHECK(smc_verify(testing::xy(), {Q("-1")}, true).verdict.pass);
  SmcReport lines = smc_verify(testing::three_lines(), {Q("-1")}, true);
  CHECK_FALSE(lines.verdict.pass);
  REQUIRE(lines.verdict.witnesses.size() == 1);
  CHECK(lines.verdict.witnesses[0].detail == "-2/3");
}

TEST_CASE("multivariate n/d") {
  MultiNdReport r = multi_nd_check(fixtures::two_factor());
  CHECK(r.hyperplane == AffineForm{{1, 2}, 2});
  CHECK(r.is_candidate);
  CHECK(r.is_polar);
  CHECK(r.verdict.pass);
  Arrangement single = Arrangement::central(2, {ints({1, 0}), ints({0, 1}), ints({1, -1})}, {1, 1, 1},
                                            FactorMatrix{{1, 1, 1}});
  MultiNdReport s = multi_nd_check(single);
  CHECK(s.hyperplane == AffineForm{{3}, 2});
  CHECK_THROWS_AS(multi_nd_check(testing::coordinate_factors_xy()), Error);
}

TEST_CASE("multivariate strong monodromy verdicts") {
  CHECK(multi_smc_verify(testing::coordinate_factors_xy(), {{{1, 0}, 1}, {{0, 1}, 1}}).verdict.pass);
  MultiSmcReport bad = multi_smc_verify(fixtures::two_factor(), {{{1, 0}, 1}, {{0, 1}, 1}});
  CHECK_FALSE(bad.verdict.pass);
  REQUIRE(bad.verdict.witnesses.size() == 1);
  CHECK(bad.verdict.witnesses[0].detail == "s1 + 2s2 + 2");
}
