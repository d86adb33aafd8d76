// SPDX-License-Identifier: Apache-2.0
#include "semilinear/nat_vector.hpp"

#include <algorithm>

#include "semilinear/errors.hpp"

namespace semilinear {

std::strong_ordering compare(const Integer& a, const Integer& b) {
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

NatVector::NatVector(std::vector<Integer> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidInput("vector must have at least one entry");
  for (const auto& e : entries_) {
    if (sgn(e) < 0) throw InvalidInput("negative vector entry " + e.get_str());
  }
}

NatVector::NatVector(std::initializer_list<long> entries)
    : NatVector(std::vector<Integer>(entries.begin(), entries.end())) {}

NatVector NatVector::zero(std::size_t dimension) {
  return NatVector(std::vector<Integer>(dimension, Integer(0)));
}

NatVector NatVector::unit(std::size_t dimension, std::size_t index) {
  std::vector<Integer> e(dimension, Integer(0));
  e.at(index) = 1;
  return NatVector(std::move(e));
}

Integer NatVector::norm() const {
  Integer best = 0;
  for (const auto& e : entries_) {
    if (e > best) best = e;
  }
  return best;
}

bool NatVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& e) { return sgn(e) == 0; });
}

bool NatVector::dominated_by(const NatVector& other) const {
  if (other.dimension() != dimension()) throw DimensionError("dominance between different dimensions");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] > other.entries_[i]) return false;
  }
  return true;
}

NatVector NatVector::operator+(const NatVector& other) const {
  if (other.dimension() != dimension()) throw DimensionError("vector sum of different dimensions");
  std::vector<Integer> sum(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) sum[i] = entries_[i] + other.entries_[i];
  return NatVector(std::move(sum));
}

NatVector NatVector::scaled(const Integer& factor) const {
  if (sgn(factor) < 0) throw InvalidInput("negative scale factor");
  std::vector<Integer> out(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) out[i] = entries_[i] * factor;
  return NatVector(std::move(out));
}

std::string NatVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ",";
    s += entries_[i].get_str();
  }
  return s + ")";
}

std::strong_ordering operator<=>(const NatVector& a, const NatVector& b) {
  const std::size_t n = std::min(a.dimension(), b.dimension());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = compare(a.entries_[i], b.entries_[i]); c != 0) return c;
  }
  return a.dimension() <=> b.dimension();
}

bool operator==(const NatVector& a, const NatVector& b) {
  return a.entries_ == b.entries_;
}

Integer norm_of(std::span<const NatVector> vectors) {
  Integer best = 0;
  for (const auto& v : vectors) {
    Integer n = v.norm();
    if (n > best) best = n;
  }
  return best;
}

void canonicalize(std::vector<NatVector>& vectors) {
  std::sort(vectors.begin(), vectors.end());
  vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
}

}  // namespace semilinear
