// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "semilinear/limits.hpp"
#include "semilinear/semilinear_set.hpp"

namespace semilinear {

/// Independent periods x_1..x_p extended by unit vectors x_{p+1}..x_k to a
/// basis of Q^k; delta = |det(x_1 | ... | x_k)|.
struct IndependentBasis {
  std::vector<NatVector> original_periods;
  std::vector<NatVector> extension;
  std::vector<std::size_t> extension_indices;
  Integer delta;

  /// x_1..x_k in order.
  std::vector<NatVector> columns() const;
};

/// Linear independence over Q; the empty set is independent.
bool is_independent(std::span<const NatVector> periods);

/// Greedy extension by e_1, e_2, ... (lowest index first).
IndependentBasis extend_to_basis(std::size_t dimension, std::span<const NatVector> periods);

/// Rewrites L(c, P) as a union of L(c', P') with independent P' ⊆ P by
/// repeatedly splitting along a minimal dependency of P.
SemilinearSet decompose_independent(const NatVector& constant, std::span<const NatVector> periods,
                                    const ResourceLimits& limits = {});

/// N^k \ L(0, P) for independent P.
SemilinearSet complement_linear_origin(std::size_t dimension, std::span<const NatVector> periods,
                                       const ResourceLimits& limits = {});

/// N^k \ L(x0, P) for independent P.
SemilinearSet complement_linear(const NatVector& x0, std::span<const NatVector> periods,
                                const ResourceLimits& limits = {});

/// Intermediate results of complement(), in pipeline order.
struct ComplementTrace {
  SemilinearSet input;
  /// One entry per component of expand_constants(input): its decomposition.
  std::vector<SemilinearSet> decompositions;
  /// Union of all decompositions, the independent-period form of the input.
  SemilinearSet independent;
  /// complement_linear of every component of `independent`.
  std::vector<SemilinearSet> linear_complements;
  /// complement_linear_origin of the period set of every component of
  /// `independent` (computed only for the trace).
  std::vector<SemilinearSet> origin_complements;
  SemilinearSet result;

  ComplementTrace() : input(1, {}), independent(1, {}), result(1, {}) {}
};

/// N^k \ S via independent decomposition, per-component complements and an
/// n-ary intersection. complement(∅) is N^k.
SemilinearSet complement(const SemilinearSet& set, const ResourceLimits& limits = {},
                         ComplementTrace* trace = nullptr);

}  // namespace semilinear
