#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

// Minimal fork-join helper: apply fn to every index in [0, count) across a
// bounded pool of std::thread workers.  The first exception thrown by any
// worker is rethrown on the calling thread after all workers join.

namespace pu {

inline void parallel_for_index(std::size_t count, const std::function<void(std::size_t)>& fn,
                               unsigned max_threads = 0) {
  if (count == 0) return;
  unsigned hw = max_threads ? max_threads : std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(count, hw));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace pu
