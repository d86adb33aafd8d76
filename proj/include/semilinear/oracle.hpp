// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "semilinear/diophantine.hpp"
#include "semilinear/semilinear_set.hpp"

namespace semilinear {

/// Ground truth by brute force on the window [0, B]^k. Everything here is
/// deliberately simple and independent of the constructive algorithms.

/// Number of points of [0, B]^k; throws InvalidInput above 2^27.
std::size_t box_size(std::size_t dimension, std::uint64_t bound);

/// Point with linear index `index` in lexicographic order of [0, B]^k.
NatVector box_point(std::size_t dimension, std::uint64_t bound, std::size_t index);

/// Membership bitmap over [0, B]^k (lexicographic index), built by
/// generation: constants inside the box, then closure under each period.
std::vector<bool> box_bitmap(const SemilinearSet& set, std::uint64_t bound);

/// Points of S inside [0, B]^k in lexicographic order, by generation.
std::vector<NatVector> enumerate_box(const SemilinearSet& set, std::uint64_t bound);

/// Same point set as enumerate_box, computed by calling member on every point.
std::vector<NatVector> filter_box(const SemilinearSet& set, std::uint64_t bound);

struct BoxComparison {
  bool equal = true;
  /// Lexicographically least point in exactly one of the two sets.
  std::optional<NatVector> witness;
};

BoxComparison equal_on_box(const SemilinearSet& a, const SemilinearSet& b, std::uint64_t bound);

/// Minimal elements of { x in [0, box]^t : A x = b } by a full scan.
/// Constraints are applied as filters (x_j >= offset, scale | x_j - offset).
/// With `exclude_zero`, the point whose substituted coordinates are all zero
/// is skipped.
std::vector<NatVector> brute_minimal_solutions(const DiophantineSystem& sys, std::uint64_t box,
                                               bool exclude_zero);

}  // namespace semilinear
