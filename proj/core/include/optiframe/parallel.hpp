#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace optiframe {

/// Worker count: OPTIFRAME_THREADS if set to a positive integer, otherwise
/// std::thread::hardware_concurrency() (at least 1).
std::size_t worker_count();

/// Splits [0, n) into `chunks` contiguous ranges and calls
/// fn(chunk, begin, end) for each, on up to worker_count() threads. Chunk
/// boundaries depend only on n and chunks, so callers that store results per
/// chunk and merge in chunk order get deterministic output.
template <typename Fn>
void parallel_chunks(std::uint64_t n, std::size_t chunks, Fn&& fn) {
  chunks = std::max<std::size_t>(1, chunks);
  auto bounds = [&](std::size_t c) { return n * c / chunks; };
  const std::size_t workers = std::min(worker_count(), chunks);
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) fn(c, bounds(c), bounds(c + 1));
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t c = w; c < chunks; c += workers) fn(c, bounds(c), bounds(c + 1));
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace optiframe
