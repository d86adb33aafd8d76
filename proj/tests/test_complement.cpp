// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "semilinear/complement.hpp"
#include "semilinear/errors.hpp"
#include "semilinear/ops.hpp"
#include "semilinear/oracle.hpp"
#include "semilinear/parallel.hpp"
#include "semilinear/random_instances.hpp"
#include "support.hpp"

using namespace semilinear;
using namespace semilinear::testing;

namespace {

std::vector<NatVector> complement_points(const SemilinearSet& s, std::uint64_t box) {
  const auto inside = enumerate_box(s, box);
  return points_where(s.dimension(), box, [&](const NatVector& p) { return !contains(inside, p); });
}

bool all_independent(const SemilinearSet& s) {
  for (const auto& c : s.components()) {
    if (!is_independent(c.periods())) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("independence") {
  const std::vector<NatVector> multiple{{1, 2}, {2, 4}};
  const std::vector<NatVector> units{{1, 0}, {0, 1}};
  const std::vector<NatVector> line{{2}, {3}};
  CHECK_FALSE(is_independent(multiple));
  CHECK(is_independent(units));
  CHECK_FALSE(is_independent(line));
  CHECK(is_independent(std::vector<NatVector>{}));
}

TEST_CASE("extend to basis") {
  SUBCASE("one period in the plane") {
    const std::vector<NatVector> p{{1, 2}};
    const IndependentBasis b = extend_to_basis(2, p);
    CHECK(b.extension == std::vector<NatVector>{{1, 0}});
    CHECK(b.extension_indices == std::vector<std::size_t>{0});
    CHECK(b.delta == 2);
    CHECK(b.columns() == std::vector<NatVector>{{1, 2}, {1, 0}});
  }
  SUBCASE("full unit basis") {
    const std::vector<NatVector> p{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    const IndependentBasis b = extend_to_basis(3, p);
    CHECK(b.extension.empty());
    CHECK(b.delta == 1);
  }
  SUBCASE("no periods") {
    const IndependentBasis b = extend_to_basis(2, std::vector<NatVector>{});
    CHECK(b.extension == std::vector<NatVector>{{1, 0}, {0, 1}});
    CHECK(b.delta == 1);
  }
  SUBCASE("skips dependent unit vectors") {
    const std::vector<NatVector> p{{1, 0}};
    const IndependentBasis b = extend_to_basis(2, p);
    CHECK(b.extension == std::vector<NatVector>{{0, 1}});
  }
  SUBCASE("dependent input rejected") {
    const std::vector<NatVector> p{{1, 2}, {2, 4}};
    CHECK_THROWS_AS(extend_to_basis(2, p), InvalidInput);
  }
}

TEST_CASE("decompose independent") {
  SUBCASE("two and three") {
    const std::vector<NatVector> p{{2}, {3}};
    const SemilinearSet d = decompose_independent(NatVector{0}, p);
    CHECK(all_independent(d));
    const SemilinearSet expect = union_of(even(), linear({3}, {{2}}));
    CHECK(equal_on_box(d, expect, 30).equal);
  }
  SUBCASE("independent input unchanged") {
    const std::vector<NatVector> p{{1, 2}, {2, 1}};
    const SemilinearSet d = decompose_independent(NatVector{3, 1}, p);
    CHECK(d == linear({3, 1}, p));
  }
  SUBCASE("three periods in the plane") {
    const std::vector<NatVector> p{{1, 0}, {0, 1}, {1, 1}};
    const SemilinearSet d = decompose_independent(NatVector{0, 0}, p);
    CHECK(all_independent(d));
    CHECK(equal_on_box(d, SemilinearSet::universe(2), 6).equal);
  }
  SUBCASE("random sets keep their semantics") {
    Rng rng(17);
    for (int i = 0; i < 80; ++i) {
      const std::size_t k = 1 + i % 2;
      const SemilinearSet s = random_set(rng, k, SetShape{1, 1, 3, 3}, true);
      const LinearComponent& c = s.components()[0];
      const SemilinearSet d = decompose_independent(c.constants()[0], c.periods());
      CHECK(all_independent(d));
      CHECK(equal_on_box(d, s, 14).equal);
    }
  }
}

TEST_CASE("complement of linear sets through the origin") {
  SUBCASE("even") {
    const std::vector<NatVector> p{{2}};
    CHECK(equal_on_box(complement_linear_origin(1, p), odd(), 21).equal);
  }
  SUBCASE("units give the empty set") {
    const std::vector<NatVector> p{{1, 0}, {0, 1}};
    CHECK(enumerate_box(complement_linear_origin(2, p), 9).empty());
  }
  SUBCASE("diagonal") {
    const std::vector<NatVector> p{{1, 1}};
    const auto expect = points_where(2, 8, [](const NatVector& x) { return at(x, 0) != at(x, 1); });
    CHECK(enumerate_box(complement_linear_origin(2, p), 8) == expect);
  }
  SUBCASE("no periods") {
    const auto expect = points_where(2, 6, [](const NatVector& x) { return !x.is_zero(); });
    CHECK(enumerate_box(complement_linear_origin(2, std::vector<NatVector>{}), 6) == expect);
  }
}

TEST_CASE("complement of shifted linear sets") {
  SUBCASE("all but zero") {
    const std::vector<NatVector> p{{1}};
    CHECK(enumerate_box(complement_linear(NatVector{1}, p), 15) == std::vector<NatVector>{{0}});
  }
  SUBCASE("origin constant matches the origin form") {
    const std::vector<NatVector> p{{1, 2}};
    CHECK(equal_on_box(complement_linear(NatVector{0, 0}, p), complement_linear_origin(2, p), 10).equal);
  }
  SUBCASE("vertical ray") {
    const std::vector<NatVector> p{{0, 1}};
    const SemilinearSet s = linear({2, 0}, p);
    CHECK(enumerate_box(complement_linear(NatVector{2, 0}, p), 6) == complement_points(s, 6));
  }
  SUBCASE("random independent sets") {
    Rng rng(31);
    int checked = 0;
    while (checked < 60) {
      const std::size_t k = 1 + checked % 2;
      const SemilinearSet s = random_set(rng, k, SetShape{1, 1, 2, 3}, true);
      const LinearComponent& c = s.components()[0];
      if (!is_independent(c.periods())) continue;
      ++checked;
      CHECK(enumerate_box(complement_linear(c.constants()[0], c.periods()), 12) == complement_points(s, 12));
    }
  }
}

TEST_CASE("complement fixed cases") {
  CHECK(equal_on_box(complement(even()), odd(), 25).equal);
  CHECK(equal_on_box(complement(SemilinearSet::empty(2)), SemilinearSet::universe(2), 8).equal);
  CHECK(enumerate_box(complement(union_of(even(), odd())), 25).empty());
  CHECK(enumerate_box(complement(linear({1}, {{1}})), 15) == std::vector<NatVector>{{0}});
}

TEST_CASE("complement is disjoint, covering and an involution on the box") {
  Rng rng(77);
  for (int i = 0; i < 60; ++i) {
    const std::size_t k = 1 + i % 2;
    const SemilinearSet s = random_set(rng, k, SetShape{2, 2, 2, 2});
    const SemilinearSet c = complement(s);
    CHECK(enumerate_box(c, 12) == complement_points(s, 12));
    if (k == 1 && i % 4 == 0) CHECK(equal_on_box(complement(c), s, 12).equal);
  }
}

TEST_CASE("complement trace") {
  const SemilinearSet s(1, {LinearComponent({{0}, {1}}, {{2}, {3}})});
  ComplementTrace t;
  const SemilinearSet r = complement(s, {}, &t);
  CHECK(t.input == s);
  CHECK(t.result == r);
  CHECK(t.decompositions.size() == expand_constants(s).components().size());
  CHECK(t.linear_complements.size() == t.independent.components().size());
  CHECK(t.origin_complements.size() == t.independent.components().size());
  CHECK(all_independent(t.independent));
  CHECK(equal_on_box(t.independent, s, 20).equal);
  CHECK(enumerate_box(r, 20) == complement_points(s, 20));
}

TEST_CASE("complement respects resource limits") {
  ResourceLimits tight;
  tight.max_components = 1;
  const std::vector<NatVector> p{{1, 1}};
  CHECK_THROWS_AS(complement(linear({0, 0}, p), tight), ResourceLimitError);
  ResourceLimits narrow;
  narrow.max_norm_bits = 1;
  CHECK_THROWS_AS(complement(linear({5}, {{7}}), narrow), ResourceLimitError);
}

TEST_CASE("complement is independent of the thread count") {
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const SemilinearSet s = random_set(rng, 2, SetShape{});
    set_worker_threads(1);
    const SemilinearSet one = complement(s);
    set_worker_threads(4);
    const SemilinearSet four = complement(s);
    set_worker_threads(1);
    CHECK(one == four);
  }
}
