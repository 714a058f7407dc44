#include <doctest.h>

#include "arrzeta/error.hpp"
#include "arrzeta/vmono.hpp"
#include "support.hpp"

using namespace arrzeta;
using namespace arrzeta::vmono;
using testing::ints;
using testing::Q;
using testing::rats;

TEST_CASE("normal crossings generator exponents") {
  MonomialConnectionSpec trivial{ints({0, 0})};
  CHECK(ncv_generator(trivial, ints({1, 1})) == std::vector<Integer>{0, 0});
  CHECK(ncv_generator(trivial, ints({0, 0})) == std::vector<Integer>{-1, -1});
  MonomialConnectionSpec half{rats({"1/2"})};
  CHECK(ncv_generator(half, rats({"1/2"})) == std::vector<Integer>{-1});
  CHECK(ncv_generator(half, rats({"3/4"})) == std::vector<Integer>{0});
}

TEST_CASE("normal crossings walls") {
  WallSet two = ncv_walls({ints({0, 0})});
  REQUIRE(two.families().size() == 2);
  WallSet mixed = ncv_walls({rats({"1/2", "0"})});
  REQUIRE(mixed.families().size() == 2);
  for (const auto& f : mixed.families()) {
    if (f.normal == ZVector{1, 0}) CHECK(f.offsets == std::set<Rational>{Q("1/2")});
    if (f.normal == ZVector{0, 1}) CHECK(f.offsets == std::set<Rational>{Q("0")});
  }
  CHECK(ncv_walls({ints({0})}).families().size() == 1);
}

TEST_CASE("diagonal example membership") {
  CHECK(diag_vres_member({0, 0, 1}, rats({"1/2", "1/2"})));
  CHECK(diag_vres_member({0, 0, 2}, ints({0, 0})));
  CHECK_FALSE(diag_vres_member({0, 0, 1}, ints({1, 1})));
  CHECK(diag_vres_member({5, 5, 0}, ints({40, 40})));
}

TEST_CASE("diagonal example eigenvalues") {
  CHECK(diag_s_eigenvalue({0, 0, 1}) == -1);
  CHECK(diag_s_eigenvalue({0, 0, 2}) == 0);
  CHECK(diag_s_eigenvalue({3, 0, 1}) == -4);
}

TEST_CASE("diagonal example annihilators") {
  CHECK(diag_annihilator(rats({"1/2", "1/2"}), rats({"3/2", "3/2"})) == std::vector<long>{1, 2});
  CHECK(diag_annihilator(rats({"1/2", "1/2"}), rats({"1/2", "1/2"})).empty());
  CHECK(diag_annihilator(ints({0, 0}), rats({"1/4", "1/4"})) == std::vector<long>{0});
  CHECK_THROWS_AS(diag_annihilator(ints({1, 1}), ints({0, 2})), Error);
  CHECK_THROWS_AS(diag_annihilator(ints({-1, 0}), ints({0, 0})), Error);
}
