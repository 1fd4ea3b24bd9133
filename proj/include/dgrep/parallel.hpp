#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace dgrep {

/// Runs body(i) for i in [0, n) on up to `threads` workers. Each index is
/// handled by exactly one worker; callers write results into per-index slots
/// and merge them in index order, so output never depends on scheduling.
template <typename Body>
void parallel_for(std::size_t n, unsigned threads, Body&& body) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) body(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace dgrep
