#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace cgc {

// Worker count for data-parallel loops: CGC_THREADS if set (clamped to
// [1, 64]), otherwise the hardware concurrency.
inline int worker_count() {
  if (const char* env = std::getenv("CGC_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return std::min(n, 64);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 64u));
}

// Statically partitioned parallel loop over [begin, end). Each worker owns a
// contiguous index range, so results written to preallocated per-index slots
// are bitwise identical regardless of the worker count. `fn(i)` must not
// touch state owned by another index.
inline void parallel_for(long begin, long end, const std::function<void(long)>& fn) {
  const long count = end - begin;
  if (count <= 0) return;
  int workers = worker_count();
  if (workers > count) workers = static_cast<int>(count);
  if (workers <= 1) {
    for (long i = begin; i < end; ++i) fn(i);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const long chunk = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const long lo = begin + w * chunk;
    const long hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back([lo, hi, &fn] {
      for (long i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : threads) t.join();
}

}  // namespace cgc
