#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace landau::detail {

inline unsigned resolve_threads(unsigned requested, std::size_t tasks) {
  unsigned n = requested != 0 ? requested : std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (tasks < n) n = static_cast<unsigned>(tasks == 0 ? 1 : tasks);
  return n;
}

/// Runs task(worker_state, i) for i in [0, count), handing out indices from a
/// shared counter. Each worker gets its own state from make_state(). Results
/// must be written to per-index slots by the task.
template <class MakeState, class Task>
void parallel_for(std::size_t count, unsigned threads, MakeState make_state, Task task) {
  threads = resolve_threads(threads, count);
  if (threads <= 1) {
    auto state = make_state();
    for (std::size_t i = 0; i < count; ++i) task(state, i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      try {
        auto state = make_state();
        for (std::size_t i = next++; i < count; i = next++) task(state, i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace landau::detail
