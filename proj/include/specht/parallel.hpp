#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace specht {

// Splits the index range [0, count) into near-equal contiguous chunks and
// runs fn(begin, end) on each, one chunk per worker.  With threads <= 1 (or
// a single chunk) fn runs on the calling thread.  fn must confine mutation
// to its own chunk or to data it synchronizes itself.
template <typename Fn>
void parallel_chunks(std::size_t count, unsigned threads, Fn&& fn) {
  if (count == 0) return;
  std::size_t workers = std::max<std::size_t>(1, threads);
  workers = std::min(workers, count);
  if (workers == 1) {
    fn(std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t base = count / workers, extra = count % workers;
  std::size_t begin = 0;
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t len = base + (w < extra ? 1 : 0);
    std::size_t end = begin + len;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    begin = end;
  }
  for (auto& th : pool) th.join();
}

// A sensible default worker count for this machine.
inline unsigned default_threads() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace specht
