#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mbk {

// Worker cap from MBK_THREADS, else hardware concurrency. Never below 1.
unsigned worker_count();

// Runs body(begin, end) over [0, n) split into fixed-size chunks handed out
// to `workers` threads. Chunk boundaries depend only on n, so any body that
// writes index-addressed output produces the same bytes for every worker count.
template <class Body>
void parallel_for(std::size_t n, unsigned workers, Body&& body, std::size_t chunk = 0) {
  if (n == 0) return;
  if (chunk == 0) chunk = std::max<std::size_t>(1, n / 256);
  const std::size_t chunks = (n + chunk - 1) / chunk;
  workers = static_cast<unsigned>(std::clamp<std::size_t>(workers, 1, chunks));

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= chunks) return;
      try {
        body(k * chunk, std::min(n, (k + 1) * chunk));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = chunks;
        return;
      }
    }
  };

  if (workers == 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace mbk
