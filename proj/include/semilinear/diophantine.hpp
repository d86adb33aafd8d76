// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "semilinear/nat_vector.hpp"

namespace semilinear {

/// Dense rectangular integer matrix (entries may be negative).
class IntegerMatrix {
 public:
  IntegerMatrix(std::size_t rows, std::size_t cols);
  /// Throws InvalidInput on ragged or empty input.
  static IntegerMatrix from_rows(const std::vector<std::vector<Integer>>& rows);
  /// Matrix whose j-th column is columns[j]; all columns share one length.
  static IntegerMatrix from_columns(std::span<const std::vector<Integer>> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Maximum absolute entry.
  Integer norm() const;
  bool is_nonnegative() const;
  std::vector<Integer> column(std::size_t c) const;
  std::vector<Integer> apply(std::span<const Integer> x) const;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> data_;
};

/// Rank over the rationals (fraction-free elimination).
std::size_t rank(const IntegerMatrix& m);
/// Determinant of a square matrix (Bareiss).
Integer determinant(const IntegerMatrix& m);

/// Per-variable affine substitution x_j = scale * z_j + offset.
struct VarConstraint {
  Integer scale = 1;
  Integer offset = 0;
};

/// A x = b over x in N^t, with optional per-variable substitutions.
struct DiophantineSystem {
  IntegerMatrix matrix;
  std::vector<Integer> rhs;
  std::map<std::size_t, VarConstraint> var_constraints;

  DiophantineSystem(IntegerMatrix a, std::vector<Integer> b,
                    std::map<std::size_t, VarConstraint> constraints = {});

  std::size_t equations() const noexcept { return matrix.rows(); }
  std::size_t unknowns() const noexcept { return matrix.cols(); }

  /// The system in z-coordinates: A diag(scale) z = b - A offset.
  DiophantineSystem substituted() const;
  /// Maps a z-solution back to x-coordinates.
  NatVector to_original(const NatVector& z, bool with_offsets = true) const;
  /// Same matrix and constraint scales, zero right-hand side, zero offsets.
  DiophantineSystem homogeneous() const;
};

struct MinimalSolutionSet {
  std::vector<NatVector> solutions;
  /// Search bound (t+1)*M of the substituted system; it bounds the solutions
  /// in z-coordinates, which coincide with x when no constraint is present.
  Integer norm_bound_used;
};

/// Least integer >= r^{r/2} * (product of the r largest column maxima of (A|b)),
/// r = rank(A), evaluated on the substituted system. Never below 1.
Integer hadamard_bound(const DiophantineSystem& sys);

/// Exact max |det| over all r x r submatrices of (A|b), r = rank(A), of the
/// substituted system. Never below 1.
Integer subdeterminant_bound(const DiophantineSystem& sys);

/// subdeterminant_bound for t <= 6 unknowns, hadamard_bound above that.
Integer determinant_bound(const DiophantineSystem& sys);

/// (t+1) * determinant_bound(sys).
Integer minimal_norm_bound(const DiophantineSystem& sys);

/// Whether A x = b (after substitution) has a solution over Z.
bool integer_solvable(const DiophantineSystem& sys);

/// Minimal elements of { x : A x = b, constraints hold }, excluding x with
/// z = 0 when `exclude_zero` is set. Reported in x-coordinates, sorted.
MinimalSolutionSet minimal_solutions(const DiophantineSystem& sys, bool exclude_zero);

/// Constants C (minimal inhomogeneous solutions) and periods Q (minimal
/// nonzero solutions of the homogeneous system under the same scales), so
/// that the constrained solution set equals L(C, Q).
struct LinearSolution {
  std::vector<NatVector> constants;
  std::vector<NatVector> periods;
};
LinearSolution solve_lcq(const DiophantineSystem& sys);

}  // namespace semilinear
