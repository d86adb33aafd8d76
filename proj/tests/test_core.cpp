// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "semilinear/errors.hpp"
#include "semilinear/json_io.hpp"
#include "semilinear/ops.hpp"
#include "semilinear/random_instances.hpp"
#include "semilinear/semilinear_set.hpp"
#include "support.hpp"

using namespace semilinear;
using namespace semilinear::testing;

TEST_CASE("nat vector basics") {
  const NatVector v{3, 0, 7};
  CHECK(v.dimension() == 3);
  CHECK(v.norm() == 7);
  CHECK_FALSE(v.is_zero());
  CHECK(NatVector::zero(2).is_zero());
  CHECK(NatVector::unit(3, 1) == NatVector{0, 1, 0});
  CHECK(NatVector{1, 2}.dominated_by(NatVector{1, 3}));
  CHECK_FALSE(NatVector{2, 0}.dominated_by(NatVector{1, 3}));
  CHECK(NatVector{1, 2} + NatVector{3, 4} == NatVector{4, 6});
  CHECK(NatVector{1, 2}.scaled(3) == NatVector{3, 6});
  CHECK(NatVector{0, 9} < NatVector{1, 0});
  CHECK_THROWS_AS(NatVector({-1}), InvalidInput);
  CHECK_THROWS_AS(NatVector(std::vector<Integer>{}), InvalidInput);
}

TEST_CASE("construction normalizes") {
  SUBCASE("even") {
    const SemilinearSet s = set_from(R"({"k":1,"components":[{"constants":[[0]],"periods":[[2]]}]})");
    REQUIRE(s.components().size() == 1);
    CHECK(s.components()[0].periods()[0] == NatVector{2});
  }
  SUBCASE("empty union") {
    const SemilinearSet s(1, {});
    CHECK(s.has_no_components());
    CHECK(enumerate_box(s, 10).empty());
  }
  SUBCASE("zero period dropped") {
    const SemilinearSet s = linear({0, 0}, {{0, 0}, {1, 1}});
    REQUIRE(s.components()[0].periods().size() == 1);
    CHECK(s.components()[0].periods()[0] == NatVector{1, 1});
  }
  SUBCASE("duplicates removed and order canonical") {
    const LinearComponent a({{1}}, {{2}});
    const LinearComponent b({{0}}, {{2}, {2}});
    const SemilinearSet s(1, {a, b, a});
    REQUIRE(s.components().size() == 2);
    CHECK(s.components()[0] < s.components()[1]);
    CHECK(s.components()[0].periods().size() == 1);
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(SemilinearSet(2, {LinearComponent({{1}}, {})}), DimensionError);
    CHECK_THROWS_AS(LinearComponent({{1}}, {{1, 2}}), DimensionError);
  }
  SUBCASE("empty constant set rejected") { CHECK_THROWS_AS(LinearComponent({}, {{1}}), InvalidInput); }
}

TEST_CASE("metrics") {
  SUBCASE("even union odd") {
    const Metrics m = metrics(union_of(even(), odd()));
    CHECK(m.index_size == 2);
    CHECK(m.max_period_card == 1);
    CHECK(m.max_period_norm == 2);
    CHECK(m.max_const_norm == 1);
    CHECK(m.nu == 2);
  }
  SUBCASE("empty set") {
    const Metrics m = metrics(SemilinearSet::empty(3));
    CHECK(m.index_size == 0);
    CHECK(m.max_period_card == 0);
    CHECK(m.max_period_norm == 0);
    CHECK(m.max_const_norm == 0);
    CHECK(m.nu == 0);
    CHECK(m.constant_count == 0);
  }
  SUBCASE("constant dominates nu") {
    const Metrics m = metrics(linear({0, 3}, {{1, 2}, {2, 0}}));
    CHECK(m.index_size == 1);
    CHECK(m.max_period_card == 2);
    CHECK(m.max_period_norm == 2);
    CHECK(m.max_const_norm == 3);
    CHECK(m.nu == 3);
  }
  SUBCASE("constant count and cardinality") {
    const SemilinearSet s(1, {LinearComponent({{0}, {1}, {5}}, {{7}}), LinearComponent({{2}}, {})});
    const Metrics m = metrics(s);
    CHECK(m.index_size == 2);
    CHECK(m.constant_count == 4);
    CHECK(m.max_const_card == 3);
  }
}

TEST_CASE("expand constants") {
  const SemilinearSet s(1, {LinearComponent({{0}, {1}}, {{2}})});
  const SemilinearSet e = expand_constants(s);
  CHECK(e == union_of(even(), odd()));
  CHECK(expand_constants(even()) == even());

  const SemilinearSet t(2, {LinearComponent({{0, 0}, {1, 0}}, {{1, 1}})});
  const SemilinearSet te = expand_constants(t);
  CHECK(te.components().size() == 2);
  CHECK(equal_on_box(t, te, 5).equal);
}

TEST_CASE("membership") {
  CHECK_FALSE(member(NatVector{7}, even()));
  CHECK(member(NatVector{8}, even()));
  CHECK(member(NatVector{4, 2}, linear({0, 0}, {{1, 1}, {2, 0}})));
  CHECK_FALSE(member(NatVector{1, 2}, linear({0, 0}, {{1, 1}, {2, 0}})));
  CHECK_FALSE(member(NatVector{0}, SemilinearSet::empty(1)));
  CHECK(member(NatVector{5, 0, 9}, SemilinearSet::universe(3)));
  CHECK(member(NatVector{3}, SemilinearSet(1, {LinearComponent({{3}}, {})})));
  CHECK_THROWS_AS(member(NatVector{1, 1}, even()), DimensionError);
}

TEST_CASE("normalize is idempotent on random sets") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const SemilinearSet s = random_set(rng, 1 + i % 3, SetShape{3, 3, 3, 4});
    const SemilinearSet n = normalize(s);
    CHECK(n == s);
    CHECK(normalize(n) == n);
  }
}

TEST_CASE("json round trip") {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const SemilinearSet s = random_set(rng, 1 + i % 3, SetShape{});
    const std::string text = json_io::dump(json_io::to_json(s));
    const SemilinearSet back = set_from(text);
    CHECK(back == s);
    CHECK(json_io::dump(json_io::to_json(back)) == text);
  }
}

TEST_CASE("json keeps integers beyond machine width") {
  const std::string text = R"({"components":[{"constants":[[123456789012345678901234567890]],"periods":[]}],"k":1})";
  const SemilinearSet s = set_from(text);
  CHECK(s.components()[0].constants()[0][0] == Integer("123456789012345678901234567890"));
  CHECK(json_io::dump(json_io::to_json(s)) == text);
}

TEST_CASE("json schema errors") {
  CHECK_THROWS_AS(set_from(R"({"components":[]})"), InvalidInput);
  CHECK_THROWS_AS(set_from(R"({"k":0,"components":[]})"), InvalidInput);
  CHECK_THROWS_AS(set_from(R"({"k":1,"components":[{"constants":[[-1]]}]})"), InvalidInput);
  CHECK_THROWS_AS(set_from(R"({"k":2,"components":[{"constants":[[1]]}]})"), DimensionError);
  CHECK_THROWS_AS(set_from(R"({"k":1,"components":[{"constants":[]}]})"), InvalidInput);
  CHECK_THROWS_AS(set_from(R"({"k":1,"components":[{"constants":[[1.5]]}]})"), InvalidInput);
  CHECK_THROWS(json_io::parse("{"));
}
