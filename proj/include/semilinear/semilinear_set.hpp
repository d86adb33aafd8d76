// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "semilinear/nat_vector.hpp"

namespace semilinear {

/// L(C, P) = { c + sum_i lambda_i * x_i : c in C, x_i in P, lambda_i in N }.
///
/// Construction canonicalizes: constants and periods are sorted and
/// deduplicated, and zero periods are dropped (L(C, P + {0}) = L(C, P)).
/// An empty period set denotes the finite set C.
class LinearComponent {
 public:
  LinearComponent(std::vector<NatVector> constants, std::vector<NatVector> periods);

  std::size_t dimension() const noexcept { return constants_.front().dimension(); }
  std::span<const NatVector> constants() const noexcept { return constants_; }
  std::span<const NatVector> periods() const noexcept { return periods_; }
  bool is_linear() const noexcept { return constants_.size() == 1; }

  friend std::strong_ordering operator<=>(const LinearComponent& a, const LinearComponent& b);
  friend bool operator==(const LinearComponent& a, const LinearComponent& b) = default;

 private:
  std::vector<NatVector> constants_;
  std::vector<NatVector> periods_;
};

/// Finite union of linear components inside N^k. Zero components denote the
/// empty set. Components are kept in canonical order without duplicates.
class SemilinearSet {
 public:
  SemilinearSet(std::size_t dimension, std::vector<LinearComponent> components);

  static SemilinearSet empty(std::size_t dimension);
  /// N^k represented as L(0, {e_1, ..., e_k}).
  static SemilinearSet universe(std::size_t dimension);

  std::size_t dimension() const noexcept { return dimension_; }
  std::span<const LinearComponent> components() const noexcept { return components_; }
  bool has_no_components() const noexcept { return components_.empty(); }

  friend std::strong_ordering operator<=>(const SemilinearSet& a, const SemilinearSet& b);
  friend bool operator==(const SemilinearSet& a, const SemilinearSet& b) = default;

 private:
  std::size_t dimension_;
  std::vector<LinearComponent> components_;
};

/// Size parameters of a representation. `constant_count` is the index size
/// after expand_constants and `max_const_card` is max_i |C_i|.
struct Metrics {
  std::size_t index_size = 0;
  std::size_t max_period_card = 0;
  Integer max_period_norm = 0;
  Integer max_const_norm = 0;
  Integer nu = 0;
  std::size_t constant_count = 0;
  std::size_t max_const_card = 0;
};

Metrics metrics(const SemilinearSet& set);

/// Re-runs canonicalization; the identity on already constructed values.
SemilinearSet normalize(const SemilinearSet& set);

/// Rewrites every L(C, P) as the union of L(c, P) over c in C.
SemilinearSet expand_constants(const SemilinearSet& set);

/// Exact membership test (no box restriction).
bool member(const NatVector& point, const LinearComponent& component);
bool member(const NatVector& point, const SemilinearSet& set);

}  // namespace semilinear
