#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tricgt {

// Splits [0, n) into `chunks` contiguous ranges; chunk i is [bounds[i], bounds[i+1]).
inline std::vector<std::size_t> chunk_bounds(std::size_t n, std::size_t chunks) {
  chunks = std::max<std::size_t>(1, std::min(chunks, std::max<std::size_t>(n, 1)));
  std::vector<std::size_t> bounds(chunks + 1);
  for (std::size_t i = 0; i <= chunks; ++i) bounds[i] = n * i / chunks;
  return bounds;
}

// Calls fn(chunk, begin, end) for every chunk of [0, n), using up to `threads`
// workers. The partition depends only on `chunks`, never on `threads`, so
// callers that merge per-chunk results in chunk order get identical output
// for any thread count. The first exception thrown by a worker is rethrown.
template <class Fn>
void parallel_chunks(std::size_t n, std::size_t chunks, std::size_t threads, Fn&& fn) {
  const auto bounds = chunk_bounds(n, chunks);
  const std::size_t count = bounds.size() - 1;
  threads = std::max<std::size_t>(1, std::min(threads, count));
  if (threads == 1) {
    for (std::size_t c = 0; c < count; ++c) fn(c, bounds[c], bounds[c + 1]);
    return;
  }
  std::mutex mutex;
  std::size_t next = 0;
  std::exception_ptr error;
  auto worker = [&] {
    for (;;) {
      std::size_t c;
      {
        std::lock_guard lock(mutex);
        if (next == count || error) return;
        c = next++;
      }
      try {
        fn(c, bounds[c], bounds[c + 1]);
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace tricgt
