// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>

#include "semilinear/semilinear_set.hpp"

namespace semilinear {

/// Caps on constructions whose output can grow double-exponentially.
struct ResourceLimits {
  std::size_t max_components = 1'000'000;
  std::size_t max_norm_bits = 4096;
};

/// Throws ResourceLimitError (tagged with `stage`) when `set` exceeds either cap.
void enforce(const ResourceLimits& limits, const SemilinearSet& set, const std::string& stage);
void enforce_count(const ResourceLimits& limits, std::size_t components, const std::string& stage);
void enforce_norm(const ResourceLimits& limits, const Integer& norm, const std::string& stage);

}  // namespace semilinear
