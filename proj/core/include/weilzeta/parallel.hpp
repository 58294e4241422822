#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace weilzeta {

/// Clamp a requested worker count to [1, 4 * hardware_concurrency]; 0 means "use hardware".
inline unsigned effective_threads(unsigned requested) {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (requested == 0) return hw;
  return std::min(requested, hw * 4);
}

/// Splits [0, count) into contiguous chunks and runs body(begin, end) on each.
/// Chunks are handed out dynamically, so body must only write to state indexed
/// by its own range. Worker exceptions are rethrown on the calling thread.
template <class Body>
void parallel_blocks(std::size_t count, unsigned threads, Body&& body) {
  threads = effective_threads(threads);
  if (count == 0) return;
  if (threads <= 1 || count < 2 * std::size_t{threads}) {
    body(std::size_t{0}, count);
    return;
  }
  const std::size_t chunks = std::min<std::size_t>(count, std::size_t{threads} * 16);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (;;) {
          std::size_t chunk = next.fetch_add(1, std::memory_order_relaxed);
          if (chunk >= chunks) return;
          try {
            body(count * chunk / chunks, count * (chunk + 1) / chunks);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next.store(chunks);
            return;
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

} // namespace weilzeta
