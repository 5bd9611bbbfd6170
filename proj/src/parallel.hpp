#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace operad {

// Worker count for coarse-grained sweeps. 0 = uninitialized, then the
// OPERAD_THREADS environment variable decides, default 1.
inline std::atomic<int> g_threads{0};

inline void set_threads(int n) { g_threads.store(n < 1 ? 1 : n); }

inline int get_threads() {
  int t = g_threads.load();
  if (t > 0) return t;
  if (const char *env = std::getenv("OPERAD_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) {
      g_threads.store(v);
      return v;
    }
  }
  g_threads.store(1);
  return 1;
}

// Runs fn(i) for i in [0, n). Work is split into contiguous chunks, one per
// worker; results must be written to disjoint slots so the outcome does not
// depend on the thread count.
inline void parallel_for(long n, const std::function<void(long)> &fn) {
  int t = get_threads();
  if (t <= 1 || n < 64) {
    for (long i = 0; i < n; i++) fn(i);
    return;
  }
  if ((long)t > n) t = (int)n;
  std::vector<std::thread> ws;
  ws.reserve(t);
  long chunk = (n + t - 1) / t;
  for (int w = 0; w < t; w++) {
    long lo = w * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    ws.emplace_back([lo, hi, &fn] {
      for (long i = lo; i < hi; i++) fn(i);
    });
  }
  for (auto &th : ws) th.join();
}

}  // namespace operad
