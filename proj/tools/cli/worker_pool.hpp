#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace bellforge::cli {

/// Worker count from BELLFORGE_THREADS, else the hardware concurrency (at least 1).
/// Malformed or non-positive values fall back to the default.
unsigned worker_count();

/// Evaluates task(0..count-1) on up to `workers` threads. Results come back in
/// index order whatever order the tasks finish in; the first exception thrown by
/// any task is rethrown after all workers have joined.
template <class Result, class Task>
std::vector<Result> parallel_map(std::size_t count, unsigned workers, Task task) {
  std::vector<Result> results(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};

  const auto run = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = task(i);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };

  const std::size_t n_threads = std::min<std::size_t>(workers == 0 ? 1 : workers, count);
  if (n_threads <= 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(run);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace bellforge::cli
