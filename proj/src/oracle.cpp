// SPDX-License-Identifier: Apache-2.0
#include "semilinear/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "semilinear/errors.hpp"

namespace semilinear {

namespace {

constexpr std::size_t kMaxBoxPoints = std::size_t{1} << 27;

// Linear index of v in [0, B]^k, or nullopt when v leaves the box.
std::optional<std::size_t> index_of(const NatVector& v, std::uint64_t bound) {
  std::size_t idx = 0;
  for (const auto& e : v.entries()) {
    if (e > bound) return std::nullopt;
    idx = idx * (bound + 1) + e.get_ui();
  }
  return idx;
}

long to_long(const Integer& v, const char* what) {
  if (!v.fits_slong_p()) throw InvalidInput(std::string("brute force needs small ") + what);
  return v.get_si();
}

}  // namespace

std::size_t box_size(std::size_t dimension, std::uint64_t bound) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < dimension; ++i) {
    if (bound + 1 > kMaxBoxPoints || size > kMaxBoxPoints / (bound + 1)) {
      throw InvalidInput("box [0," + std::to_string(bound) + "]^" + std::to_string(dimension) + " is too large");
    }
    size *= bound + 1;
  }
  return size;
}

NatVector box_point(std::size_t dimension, std::uint64_t bound, std::size_t index) {
  std::vector<Integer> e(dimension);
  for (std::size_t i = dimension; i-- > 0;) {
    e[i] = static_cast<unsigned long>(index % (bound + 1));
    index /= bound + 1;
  }
  return NatVector(std::move(e));
}

std::vector<bool> box_bitmap(const SemilinearSet& set, std::uint64_t bound) {
  const std::size_t k = set.dimension();
  const std::size_t size = box_size(k, bound);
  std::vector<bool> result(size, false);
  std::vector<bool> scratch(size);
  for (const auto& comp : set.components()) {
    std::fill(scratch.begin(), scratch.end(), false);
    bool any = false;
    for (const auto& c : comp.constants()) {
      if (auto idx = index_of(c, bound)) {
        scratch[*idx] = true;
        any = true;
      }
    }
    if (!any) continue;
    for (const auto& p : comp.periods()) {
      auto step = index_of(p, bound);
      if (!step) continue;
      // Adding a non-negative vector increases the lexicographic index, so a
      // single ascending pass closes the set under +p.
      std::vector<std::uint64_t> coords(k);
      for (std::size_t idx = 0; idx < size; ++idx) {
        if (!scratch[idx]) continue;
        std::size_t rest = idx;
        bool inside = true;
        for (std::size_t i = k; i-- > 0;) {
          coords[i] = rest % (bound + 1);
          rest /= bound + 1;
          if (coords[i] + p[i].get_ui() > bound) inside = false;
        }
        if (inside) scratch[idx + *step] = true;
      }
    }
    for (std::size_t idx = 0; idx < size; ++idx) {
      if (scratch[idx]) result[idx] = true;
    }
  }
  return result;
}

std::vector<NatVector> enumerate_box(const SemilinearSet& set, std::uint64_t bound) {
  const auto bits = box_bitmap(set, bound);
  std::vector<NatVector> out;
  for (std::size_t idx = 0; idx < bits.size(); ++idx) {
    if (bits[idx]) out.push_back(box_point(set.dimension(), bound, idx));
  }
  return out;
}

std::vector<NatVector> filter_box(const SemilinearSet& set, std::uint64_t bound) {
  const std::size_t size = box_size(set.dimension(), bound);
  std::vector<NatVector> out;
  for (std::size_t idx = 0; idx < size; ++idx) {
    NatVector y = box_point(set.dimension(), bound, idx);
    if (member(y, set)) out.push_back(std::move(y));
  }
  return out;
}

BoxComparison equal_on_box(const SemilinearSet& a, const SemilinearSet& b, std::uint64_t bound) {
  if (a.dimension() != b.dimension()) {
    throw DimensionError("box comparison of sets with dimensions " + std::to_string(a.dimension()) + " and " +
                         std::to_string(b.dimension()));
  }
  const auto x = box_bitmap(a, bound);
  const auto y = box_bitmap(b, bound);
  for (std::size_t idx = 0; idx < x.size(); ++idx) {
    if (x[idx] != y[idx]) return {false, box_point(a.dimension(), bound, idx)};
  }
  return {};
}

std::vector<NatVector> brute_minimal_solutions(const DiophantineSystem& sys, std::uint64_t box, bool exclude_zero) {
  const std::size_t s = sys.equations();
  const std::size_t t = sys.unknowns();
  box_size(t, box);
  std::vector<long> a(s * t);
  for (std::size_t r = 0; r < s; ++r) {
    for (std::size_t c = 0; c < t; ++c) a[c * s + r] = to_long(sys.matrix.at(r, c), "matrix entries");
  }
  std::vector<long> scale(t, 1);
  std::vector<long> offset(t, 0);
  for (const auto& [var, c] : sys.var_constraints) {
    scale[var] = to_long(c.scale, "scales");
    offset[var] = to_long(c.offset, "offsets");
  }

  // Odometer over [0, box]^t with an incrementally maintained residual A x - b.
  std::vector<long> x(t, 0);
  std::vector<long> residual(s);
  for (std::size_t r = 0; r < s; ++r) residual[r] = -to_long(sys.rhs[r], "right-hand sides");
  std::vector<std::vector<long>> solutions;
  while (true) {
    bool ok = std::all_of(residual.begin(), residual.end(), [](long v) { return v == 0; });
    bool at_origin = true;
    for (std::size_t j = 0; ok && j < t; ++j) {
      if (x[j] < offset[j] || (x[j] - offset[j]) % scale[j] != 0) ok = false;
      if (x[j] != offset[j]) at_origin = false;
    }
    if (ok && !(exclude_zero && at_origin)) solutions.push_back(x);

    bool advanced = false;
    for (std::size_t j = t; j-- > 0 && !advanced;) {
      if (static_cast<std::uint64_t>(x[j]) < box) {
        ++x[j];
        for (std::size_t r = 0; r < s; ++r) residual[r] += a[j * s + r];
        advanced = true;
      } else {
        for (std::size_t r = 0; r < s; ++r) residual[r] -= a[j * s + r] * x[j];
        x[j] = 0;
      }
    }
    if (!advanced) break;
  }

  auto sum = [](const std::vector<long>& v) { return std::accumulate(v.begin(), v.end(), 0L); };
  std::stable_sort(solutions.begin(), solutions.end(),
                   [&](const auto& l, const auto& r) { return sum(l) < sum(r); });
  std::vector<std::vector<long>> minimal;
  for (const auto& cand : solutions) {
    bool dominated = std::any_of(minimal.begin(), minimal.end(), [&](const auto& m) {
      for (std::size_t i = 0; i < t; ++i) {
        if (m[i] > cand[i]) return false;
      }
      return true;
    });
    if (!dominated) minimal.push_back(cand);
  }
  std::vector<NatVector> out;
  for (const auto& m : minimal) {
    std::vector<Integer> e;
    for (long v : m) e.emplace_back(v);
    out.emplace_back(std::move(e));
  }
  canonicalize(out);
  return out;
}

}  // namespace semilinear
