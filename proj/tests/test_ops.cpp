// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "semilinear/errors.hpp"
#include "semilinear/ops.hpp"
#include "semilinear/oracle.hpp"
#include "semilinear/random_instances.hpp"
#include "support.hpp"

using namespace semilinear;
using namespace semilinear::testing;

namespace {

SemilinearSet mult(long d) { return linear({0}, {{d}}); }

}  // namespace

TEST_CASE("union") {
  const SemilinearSet u = union_of(even(), odd());
  CHECK(u.components().size() == 2);
  CHECK(equal_on_box(u, SemilinearSet::universe(1), 20).equal);
  CHECK(union_of(even(), SemilinearSet::empty(1)) == even());
  CHECK_THROWS_AS(union_of(even(), SemilinearSet::universe(2)), DimensionError);
}

TEST_CASE("intersection fixed cases") {
  SUBCASE("even and multiples of three") {
    const SemilinearSet r = intersect(even(), mult(3));
    CHECK(equal_on_box(r, mult(6), 60).equal);
    CHECK(r == mult(6));
  }
  SUBCASE("idempotent") {
    const SemilinearSet s = linear({1, 0}, {{1, 2}, {2, 1}});
    CHECK(equal_on_box(intersect(s, s), s, 12).equal);
  }
  SUBCASE("even and odd") { CHECK(enumerate_box(intersect(even(), odd()), 40).empty()); }
  SUBCASE("universe is neutral") {
    const SemilinearSet s = linear({1, 2}, {{0, 3}, {2, 2}});
    CHECK(equal_on_box(intersect(s, SemilinearSet::universe(2)), s, 12).equal);
  }
  SUBCASE("several constants") {
    const SemilinearSet a(1, {LinearComponent({{0}, {1}}, {{3}})});
    const auto expect = points_where(1, 30, [](const NatVector& p) {
      const long x = at(p, 0);
      return x % 2 == 0 && (x % 3 == 0 || x % 3 == 1);
    });
    CHECK(enumerate_box(intersect(a, even()), 30) == expect);
  }
  SUBCASE("finite operands") {
    const SemilinearSet a(1, {LinearComponent({{2}, {4}, {5}}, {})});
    CHECK(enumerate_box(intersect(a, even()), 10) == std::vector<NatVector>{{2}, {4}});
  }
}

TEST_CASE("intersect_linear") {
  const NatVector c1{0};
  const NatVector c2{1};
  const std::vector<NatVector> p{{2}};
  CHECK_FALSE(intersect_linear(c1, p, c2, p).has_value());
  const auto r = intersect_linear(c1, p, NatVector{0}, std::vector<NatVector>{{3}});
  REQUIRE(r.has_value());
  CHECK(r->constants()[0] == NatVector{0});
  CHECK(r->periods()[0] == NatVector{6});
}

TEST_CASE("intersect many") {
  const std::vector<SemilinearSet> three{even(), mult(3), mult(5)};
  CHECK(equal_on_box(intersect_many(three), mult(30), 60).equal);
  const std::vector<SemilinearSet> one{odd()};
  CHECK(intersect_many(one) == odd());
  CHECK_THROWS_AS(intersect_many(std::vector<SemilinearSet>{}), InvalidInput);

  // Order of operands does not change the result.
  const std::vector<SemilinearSet> shuffled{mult(5), even(), mult(3)};
  CHECK(intersect_many(shuffled) == intersect_many(three));
}

TEST_CASE("preimage") {
  SUBCASE("identity") {
    const IntegerMatrix id = IntegerMatrix::from_rows({{1, 0}, {0, 1}});
    const SemilinearSet s = linear({1, 0}, {{1, 2}});
    CHECK(equal_on_box(preimage(id, s), s, 10).equal);
  }
  SUBCASE("sum map") {
    const IntegerMatrix h = IntegerMatrix::from_rows({{1, 1}});
    const auto expect = points_where(2, 10, [](const NatVector& p) { return (at(p, 0) + at(p, 1)) % 2 == 0; });
    CHECK(enumerate_box(preimage(h, even()), 10) == expect);
  }
  SUBCASE("zero column") {
    const IntegerMatrix h = IntegerMatrix::from_rows({{0, 2}});
    const auto expect = points_where(2, 8, [](const NatVector& p) { return at(p, 1) >= 1; });
    CHECK(enumerate_box(preimage(h, linear({2}, {{1}})), 8) == expect);
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(preimage(IntegerMatrix::from_rows({{1, -1}}), even()), InvalidInput);
    CHECK_THROWS_AS(preimage(IntegerMatrix::from_rows({{1}, {1}}), even()), DimensionError);
  }
}

TEST_CASE("operations agree with pointwise semantics") {
  Rng rng(2024);
  for (int i = 0; i < 60; ++i) {
    const std::size_t k = 1 + i % 2;
    const SemilinearSet a = random_set(rng, k, SetShape{});
    const SemilinearSet b = random_set(rng, k, SetShape{});
    const std::uint64_t box = 14;
    const auto ea = enumerate_box(a, box);
    const auto eb = enumerate_box(b, box);
    CHECK(enumerate_box(union_of(a, b), box) ==
          points_where(k, box, [&](const NatVector& p) { return contains(ea, p) || contains(eb, p); }));
    CHECK(enumerate_box(intersect(a, b), box) ==
          points_where(k, box, [&](const NatVector& p) { return contains(ea, p) && contains(eb, p); }));

    const std::size_t k1 = 1 + draw(rng, 0, 1);
    const IntegerMatrix h = random_matrix(rng, k, k1, 0, 2);
    CHECK(enumerate_box(preimage(h, a), 10) == points_where(k1, 10, [&](const NatVector& x) {
            return member(NatVector(h.apply(x.entries())), a);
          }));
  }
}

TEST_CASE("resource limits stop intersections") {
  ResourceLimits tight;
  tight.max_components = 1;
  const SemilinearSet a(1, {LinearComponent({{0}, {1}}, {{2}})});
  CHECK_THROWS_AS(intersect(a, SemilinearSet::universe(1), &tight), ResourceLimitError);
}
