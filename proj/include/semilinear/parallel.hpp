// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <vector>

namespace semilinear {

/// Number of worker threads used by the set operations (default 1).
/// Results never depend on this setting.
void set_worker_threads(unsigned count);
unsigned worker_threads();

namespace detail {
void run_indexed(std::size_t count, const std::function<void(std::size_t)>& body);
}

/// out[i] = f(i) for i in [0, count), possibly on several threads. If any
/// call throws, the remaining work is abandoned and the exception with the
/// lowest index is rethrown once all workers have stopped.
template <class F>
auto parallel_map(std::size_t count, F&& f) -> std::vector<decltype(f(std::size_t{}))> {
  using R = decltype(f(std::size_t{}));
  std::vector<std::optional<R>> slots(count);
  detail::run_indexed(count, [&](std::size_t i) { slots[i].emplace(f(i)); });
  std::vector<R> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace semilinear
