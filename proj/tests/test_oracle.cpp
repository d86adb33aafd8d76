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

DiophantineSystem system(std::vector<std::vector<Integer>> a, std::vector<Integer> b) {
  return DiophantineSystem(IntegerMatrix::from_rows(a), std::move(b));
}

}  // namespace

TEST_CASE("box indexing") {
  CHECK(box_size(2, 3) == 16);
  CHECK(box_point(2, 3, 0) == NatVector{0, 0});
  CHECK(box_point(2, 3, 5) == NatVector{1, 1});
  CHECK(box_point(2, 3, 15) == NatVector{3, 3});
  CHECK_THROWS_AS(box_size(4, 1000), InvalidInput);
}

TEST_CASE("enumerate box") {
  CHECK(enumerate_box(even(), 7) == std::vector<NatVector>{{0}, {2}, {4}, {6}});
  CHECK(enumerate_box(SemilinearSet::empty(3), 4).empty());
  const std::vector<NatVector> diag{{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  CHECK(enumerate_box(linear({0, 0}, {{1, 1}}), 3) == diag);
  CHECK(enumerate_box(linear({9}, {{1}}), 5).empty());
}

TEST_CASE("generation and pointwise filtering agree") {
  Rng rng(404);
  for (int i = 0; i < 150; ++i) {
    const std::size_t k = 1 + i % 3;
    const SemilinearSet s = random_set(rng, k, SetShape{3, 3, 3, 4});
    const std::uint64_t box = k == 3 ? 7 : 16;
    CHECK(enumerate_box(s, box) == filter_box(s, box));
  }
}

TEST_CASE("equality on a box") {
  const SemilinearSet two_three = linear({0}, {{2}, {3}});
  const SemilinearSet split = union_of(even(), linear({3}, {{2}}));
  CHECK(equal_on_box(two_three, split, 20).equal);
  const BoxComparison c = equal_on_box(even(), odd(), 5);
  CHECK_FALSE(c.equal);
  REQUIRE(c.witness.has_value());
  CHECK(*c.witness == NatVector{0});
  CHECK(equal_on_box(split, split, 3).equal);
  CHECK_FALSE(equal_on_box(split, split, 3).witness.has_value());
  CHECK_THROWS_AS(equal_on_box(even(), SemilinearSet::universe(2), 3), DimensionError);
}

TEST_CASE("brute force minimal solutions") {
  CHECK(brute_minimal_solutions(system({{2, -3}}, {0}), 9, true) == std::vector<NatVector>{{3, 2}});
  CHECK(brute_minimal_solutions(system({{1}}, {5}), 9, false) == std::vector<NatVector>{{5}});
  const std::vector<NatVector> anti{{0, 2}, {1, 1}, {2, 0}};
  CHECK(brute_minimal_solutions(system({{1, 1}}, {2}), 9, false) == anti);
  CHECK(brute_minimal_solutions(system({{2, -3}}, {0}), 9, false) == std::vector<NatVector>{{0, 0}});
}

TEST_CASE("random generators are reproducible") {
  Rng a(123);
  Rng b(123);
  for (int i = 0; i < 20; ++i) {
    CHECK(random_set(a, 2, SetShape{}) == random_set(b, 2, SetShape{}));
    CHECK(random_matrix(a, 2, 3, -2, 2) == random_matrix(b, 2, 3, -2, 2));
  }
  Rng c(1);
  for (int i = 0; i < 500; ++i) {
    const long v = draw(c, -3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
  }
  Rng d(9);
  for (int i = 0; i < 50; ++i) CHECK_FALSE(random_set(d, 1, SetShape{}, true).has_no_components());
}
