#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace flagcoh {

/// Upper bound on worker threads used by one call.
struct Parallelism {
  unsigned workers = default_workers();

  static unsigned default_workers() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
  }
  static Parallelism serial() { return Parallelism{1}; }
};

/// Runs body(i) for i in [0, count). Work is handed out dynamically; callers
/// write results into per-index slots so the outcome does not depend on the
/// schedule. The first exception thrown by any task is rethrown.
template <class Body>
void parallel_for(std::size_t count, Parallelism parallel, Body&& body) {
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, parallel.workers), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      body(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count)
        return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure)
          failure = std::current_exception();
        next.store(count);
      }
    }
  };

  std::vector<std::jthread> threads;
  threads.reserve(workers - 1);
  for (std::size_t t = 1; t < workers; ++t)
    threads.emplace_back(worker);
  worker();
  threads.clear();
  if (failure)
    std::rethrow_exception(failure);
}

} // namespace flagcoh
