// SPDX-License-Identifier: Apache-2.0
#include "semilinear/random_instances.hpp"

#include "semilinear/errors.hpp"

namespace semilinear {

long draw(Rng& rng, long lo, long hi) {
  if (hi < lo) throw InvalidInput("empty draw range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng() % span);
}

namespace {

NatVector random_vector(Rng& rng, std::size_t dimension, long max_entry) {
  std::vector<Integer> e(dimension);
  for (auto& v : e) v = draw(rng, 0, max_entry);
  return NatVector(std::move(e));
}

}  // namespace

SemilinearSet random_set(Rng& rng, std::size_t dimension, const SetShape& shape, bool nonempty) {
  const auto lo = nonempty ? 1L : 0L;
  const long count = draw(rng, lo, static_cast<long>(shape.max_components));
  std::vector<LinearComponent> comps;
  for (long i = 0; i < count; ++i) {
    std::vector<NatVector> constants;
    std::vector<NatVector> periods;
    const long nc = draw(rng, 1, static_cast<long>(shape.max_constants));
    const long np = draw(rng, 0, static_cast<long>(shape.max_periods));
    for (long j = 0; j < nc; ++j) constants.push_back(random_vector(rng, dimension, shape.max_entry));
    for (long j = 0; j < np; ++j) periods.push_back(random_vector(rng, dimension, shape.max_entry));
    comps.emplace_back(std::move(constants), std::move(periods));
  }
  return SemilinearSet(dimension, std::move(comps));
}

IntegerMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  IntegerMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = draw(rng, lo, hi);
  }
  return m;
}

DiophantineSystem random_system(Rng& rng, std::size_t max_size, long entry, long rhs) {
  const auto s = static_cast<std::size_t>(draw(rng, 1, static_cast<long>(max_size)));
  const auto t = static_cast<std::size_t>(draw(rng, 1, static_cast<long>(max_size)));
  IntegerMatrix a = random_matrix(rng, s, t, -entry, entry);
  std::vector<Integer> b(s);
  for (auto& v : b) v = draw(rng, -rhs, rhs);
  return DiophantineSystem(std::move(a), std::move(b));
}

}  // namespace semilinear
