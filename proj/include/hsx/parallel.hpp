#pragma once

// Deterministic fork-join loop.  Thread count comes from HSX_THREADS (>= 1);
// results must be written to disjoint slots so scheduling cannot change any
// output byte.

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace hsx {

inline int thread_count() {
  if (const char* env = std::getenv("HSX_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

template <typename Fn>
void parallel_for(int n, const Fn& fn) {
  int nt = std::min(thread_count(), n);
  if (nt <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (int t = 0; t < nt; ++t) {
    pool.emplace_back([&, t] {
      for (int i = t; i < n; i += nt) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace hsx
