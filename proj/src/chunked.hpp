#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace maxkin::detail {

// Runs fn(chunk_index) for every chunk, possibly on several threads.
// fn must write only to chunk-local state and must not throw.
template <typename Fn>
void run_chunked(std::size_t chunk_count, unsigned max_workers, Fn&& fn) {
  unsigned workers = max_workers;
  if (workers == 0) {
    workers = std::thread::hardware_concurrency();
    if (workers == 0) {
      workers = 1;
    }
  }
  if (workers > chunk_count) {
    workers = static_cast<unsigned>(chunk_count);
  }
  if (workers <= 1) {
    for (std::size_t i = 0; i < chunk_count; ++i) {
      fn(i);
    }
    return;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= chunk_count) {
          return;
        }
        fn(i);
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
}

}  // namespace maxkin::detail
