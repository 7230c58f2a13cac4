#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace dcf {

/// Run fn(i) for i in [0, n_tasks) on up to `threads` workers. Tasks must
/// write to disjoint slots; results are then identical for any worker
/// count. Blocked static partition, no shared mutable state.
template <typename Fn>
void parallel_for(std::size_t n_tasks, int threads, Fn&& fn) {
  if (threads <= 1 || n_tasks <= 1) {
    for (std::size_t i = 0; i < n_tasks; ++i) fn(i);
    return;
  }
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(threads), n_tasks);
  const std::size_t chunk = (n_tasks + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n_tasks, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

int default_thread_count();

}  // namespace dcf
