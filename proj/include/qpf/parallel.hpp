#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace qpf {

/// Runs fn(index) for index in [0, count) across `threads` workers
/// (0 = hardware concurrency).  Work items must write to disjoint state, so
/// results do not depend on the schedule.
inline void parallel_for_index(int count, int threads,
                               const std::function<void(int)>& fn) {
  int n_workers = threads > 0 ? threads
                              : static_cast<int>(std::thread::hardware_concurrency());
  if (n_workers < 1) n_workers = 1;
  if (n_workers == 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }

  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
  };
  std::vector<std::jthread> pool;
  pool.reserve(n_workers - 1);
  for (int t = 1; t < n_workers; ++t) pool.emplace_back(worker);
  worker();
}

}  // namespace qpf
