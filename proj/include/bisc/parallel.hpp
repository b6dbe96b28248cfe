#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace bisc {

/// Worker count from BISC_THREADS, falling back to the hardware concurrency.
inline std::size_t thread_count() {
  if (const char* env = std::getenv("BISC_THREADS")) {
    try {
      const long n = std::stol(env);
      if (n > 0) return static_cast<std::size_t>(n);
    } catch (...) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Number of chunks worth spawning for `n` items of at least `min_chunk`.
inline std::size_t chunk_count(std::size_t n, std::size_t min_chunk) {
  return std::max<std::size_t>(1, std::min(thread_count(), n / std::max<std::size_t>(1, min_chunk)));
}

/// Splits [0, n) into `workers` contiguous chunks and runs
/// `body(chunk, begin, end)` on each from its own thread. Chunk indices are
/// stable so callers can merge per-chunk results in order. `body` must not
/// throw.
template <class Body>
void parallel_chunks(std::size_t n, std::size_t workers, Body&& body) {
  if (workers <= 1) {
    body(std::size_t{0}, std::size_t{0}, n);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = n * w / workers;
    const std::size_t end = n * (w + 1) / workers;
    pool.emplace_back([&body, w, begin, end] { body(w, begin, end); });
  }
}

}  // namespace bisc
