// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace s3fam {

inline unsigned default_workers(unsigned requested = 0) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 4;
}

/// Runs fn(i) for i in [0, n) on a small thread pool, handing out chunks of
/// `grain` indices at a time. Order of execution is unspecified; fn must
/// handle synchronization for shared state.
inline void parallel_for(std::size_t n, unsigned workers,
                         const std::function<void(std::size_t)>& fn,
                         std::size_t grain = 1024) {
  workers = default_workers(workers);
  if (n == 0) return;
  if (workers <= 1 || n <= grain) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  unsigned count = static_cast<unsigned>(std::min<std::size_t>(workers, n / grain + 1));
  pool.reserve(count);
  for (unsigned t = 0; t < count; ++t) {
    pool.emplace_back([&]() {
      for (;;) {
        std::size_t begin = next.fetch_add(grain);
        if (begin >= n) return;
        std::size_t end = std::min(n, begin + grain);
        for (std::size_t i = begin; i < end; ++i) fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace s3fam
