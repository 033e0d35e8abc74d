#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace cglab {

// Runs fn(begin, end) over contiguous chunks of [0, n), one chunk per worker.
// Callers write results into per-index slots, so output does not depend on
// the worker count.
template <typename Fn>
void parallel_chunks(std::size_t n, unsigned workers, Fn&& fn) {
  workers = std::max(1u, workers);
  if (workers == 1 || n < 2 * static_cast<std::size_t>(workers)) {
    fn(std::size_t{0}, n);
    return;
  }
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::jthread> pool;
  for (std::size_t begin = 0; begin < n; begin += chunk) {
    const std::size_t end = std::min(n, begin + chunk);
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
}

}  // namespace cglab
