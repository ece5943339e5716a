#ifndef SPECTRALENS_PARALLEL_HPP
#define SPECTRALENS_PARALLEL_HPP

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace spectralens {

// Thread cap: SPECTRALENS_THREADS if set, else hardware concurrency.
inline std::size_t max_threads() {
  if (const char* env = std::getenv("SPECTRALENS_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<std::size_t>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Runs body(i) for i in [0, n). Each index must write only its own slots so
// the result is independent of the schedule.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  const std::size_t nthreads = std::min(max_threads(), n);
  if (nthreads <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(nthreads);
  const std::size_t chunk = (n + nthreads - 1) / nthreads;
  for (std::size_t t = 0; t < nthreads; ++t) {
    const std::size_t lo = t * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back([lo, hi, &body] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& w : workers) w.join();
}

}  // namespace spectralens

#endif  // SPECTRALENS_PARALLEL_HPP
