#pragma once

#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace macb {

// Worker cap from MACB_THREADS (default 1).
inline unsigned worker_count() {
  const char* s = std::getenv("MACB_THREADS");
  if (!s) return 1;
  try {
    long v = std::stol(s);
    return v < 1 ? 1u : static_cast<unsigned>(v);
  } catch (const std::exception&) {
    return 1;
  }
}

// out[i] = fn(i) for i < n, computed on up to worker_count() threads.
// Results land in index order, so reductions over out are deterministic.
template <class T, class Fn>
std::vector<T> parallel_map(size_t n, Fn fn) {
  std::vector<T> out(n);
  unsigned w = worker_count();
  if (w <= 1 || n < 2) {
    for (size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  if (w > n) w = static_cast<unsigned>(n);
  std::vector<std::exception_ptr> errs(w);
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < w; ++k)
    pool.emplace_back([&, k] {
      try {
        for (size_t i = k; i < n; i += w) out[i] = fn(i);
      } catch (...) {
        errs[k] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace macb
