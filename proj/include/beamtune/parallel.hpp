#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace beamtune {

// Runs fn(i) for i in [0, n) on up to `workers` threads. Each index is
// handled exactly once and results must be written to per-index slots, so the
// outcome does not depend on the worker count.
template <class Fn>
void parallel_for(std::size_t n, std::size_t workers, Fn&& fn) {
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(n, 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) fn(i);
    });
  }
}

}  // namespace beamtune
