#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace resalg {

/// Worker cap from the RESALG_THREADS environment variable; 0 or unset means
/// one worker per hardware thread.
int worker_count();

/// Runs fn(0..count-1), possibly across threads, and returns the results in
/// index order. Results are identical to the sequential run regardless of the
/// worker count, so callers stay deterministic.
template <typename R, typename Fn>
std::vector<R> parallel_map(int count, Fn&& fn) {
  std::vector<R> out(count);
  const int workers = std::min(worker_count(), count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1))
        out[i] = fn(i);
    });
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace resalg
