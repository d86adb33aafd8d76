// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace semilinear {

/// Arbitrary precision integer used for every entry, norm and bound.
using Integer = mpz_class;

std::strong_ordering compare(const Integer& a, const Integer& b);

/// A point of N^k. Entries are non-negative and k >= 1.
class NatVector {
 public:
  explicit NatVector(std::vector<Integer> entries);
  NatVector(std::initializer_list<long> entries);

  static NatVector zero(std::size_t dimension);
  static NatVector unit(std::size_t dimension, std::size_t index);

  std::size_t dimension() const noexcept { return entries_.size(); }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Integer> entries() const noexcept { return entries_; }

  /// Maximum norm.
  Integer norm() const;
  bool is_zero() const;
  /// Componentwise `*this <= other`.
  bool dominated_by(const NatVector& other) const;

  NatVector operator+(const NatVector& other) const;
  NatVector scaled(const Integer& factor) const;

  std::string to_string() const;

  friend std::strong_ordering operator<=>(const NatVector& a, const NatVector& b);
  friend bool operator==(const NatVector& a, const NatVector& b);

 private:
  std::vector<Integer> entries_;
};

/// Maximum norm of a finite set of vectors, 0 for the empty set.
Integer norm_of(std::span<const NatVector> vectors);

/// Sorts and removes duplicates.
void canonicalize(std::vector<NatVector>& vectors);

}  // namespace semilinear
