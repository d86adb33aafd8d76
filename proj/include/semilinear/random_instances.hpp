// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "semilinear/diophantine.hpp"
#include "semilinear/semilinear_set.hpp"

namespace semilinear {

/// Seeded generators for small test instances. Draws use plain modular
/// reduction of std::mt19937_64 output so that a seed yields the same
/// instance on every platform.
using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
long draw(Rng& rng, long lo, long hi);

struct SetShape {
  std::size_t max_components = 2;
  std::size_t max_constants = 2;
  std::size_t max_periods = 2;
  long max_entry = 3;
};

/// Between 0 and max_components components (at least one when
/// `nonempty`), each with 1..max_constants constants and 0..max_periods
/// periods, entries in [0, max_entry].
SemilinearSet random_set(Rng& rng, std::size_t dimension, const SetShape& shape, bool nonempty = false);

/// rows x cols matrix with entries in [lo, hi].
IntegerMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi);

/// s, t in [1, max_size], matrix entries in [-entry, entry], rhs in [-rhs, rhs].
DiophantineSystem random_system(Rng& rng, std::size_t max_size, long entry, long rhs);

}  // namespace semilinear
