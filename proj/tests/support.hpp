// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "semilinear/json_io.hpp"
#include "semilinear/oracle.hpp"
#include "semilinear/semilinear_set.hpp"

namespace semilinear::testing {

inline SemilinearSet set_from(std::string_view text) { return json_io::read_set(json_io::parse(text)); }

inline SemilinearSet linear(NatVector c, std::vector<NatVector> periods) {
  const std::size_t k = c.dimension();
  return SemilinearSet(k, {LinearComponent({std::move(c)}, std::move(periods))});
}

inline SemilinearSet even() { return linear({0}, {{2}}); }
inline SemilinearSet odd() { return linear({1}, {{2}}); }

/// Points of [0, B]^k satisfying `pred`, lexicographic order.
inline std::vector<NatVector> points_where(std::size_t k, std::uint64_t bound,
                                           const std::function<bool(const NatVector&)>& pred) {
  std::vector<NatVector> out;
  const std::size_t n = box_size(k, bound);
  for (std::size_t i = 0; i < n; ++i) {
    NatVector p = box_point(k, bound, i);
    if (pred(p)) out.push_back(std::move(p));
  }
  return out;
}

inline long at(const NatVector& v, std::size_t i) { return v[i].get_si(); }

inline bool contains(const std::vector<NatVector>& sorted, const NatVector& p) {
  return std::binary_search(sorted.begin(), sorted.end(), p);
}

}  // namespace semilinear::testing
