// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>

#include "semilinear/diophantine.hpp"
#include "semilinear/limits.hpp"
#include "semilinear/semilinear_set.hpp"

namespace semilinear {

/// Component concatenation followed by canonicalization.
SemilinearSet union_of(const SemilinearSet& a, const SemilinearSet& b);

/// L(c1, P1) ∩ L(c2, P2) as L(c1 + tau(C), tau(Q)), where (C, Q) describe the
/// solutions (lambda, mu) of sum lambda_r x_r - sum mu_s y_s = c2 - c1 and
/// tau(lambda, mu) = sum lambda_r x_r. nullopt when the intersection is empty.
std::optional<LinearComponent> intersect_linear(const NatVector& c1, std::span<const NatVector> p1,
                                                const NatVector& c2, std::span<const NatVector> p2);

/// Expands constants of both operands and intersects every pair of linear
/// components. Empty pairwise intersections are dropped.
SemilinearSet intersect(const SemilinearSet& a, const SemilinearSet& b,
                        const ResourceLimits* limits = nullptr);

/// Intersection of a non-empty sequence: operands are sorted canonically and
/// adjacent pairs are intersected round by round (an odd leftover moves on
/// unchanged), which takes exactly ceil(log2 |sets|) rounds.
SemilinearSet intersect_many(std::span<const SemilinearSet> sets, const ResourceLimits* limits = nullptr);

/// { x in N^k1 : H x in S } for H in N^{k2 x k1}, k2 = dim S.
SemilinearSet preimage(const IntegerMatrix& h, const SemilinearSet& s);

}  // namespace semilinear
