// OpenMP loop helpers. Every parallel loop writes per-index slots only, so
// results are identical for any thread count; serial variants are kept as the
// reference implementation for tests and benchmarks.
#pragma once

#include <cstdint>
#include <utility>

#include <omp.h>

namespace fracperc {

// jobs == 0 means "use all hardware threads".
inline int resolve_jobs(int jobs) {
  return jobs > 0 ? jobs : omp_get_max_threads();
}

template <class Fn>
void serial_for(std::int64_t count, Fn&& fn) {
  for (std::int64_t i = 0; i < count; ++i) fn(i);
}

// fn(i) must touch only state owned by index i.
template <class Fn>
void parallel_for(std::int64_t count, int jobs, Fn&& fn) {
  const int k = resolve_jobs(jobs);
  if (k == 1 || count < 2) {
    serial_for(count, std::forward<Fn>(fn));
    return;
  }
#pragma omp parallel for schedule(dynamic, 1) num_threads(k)
  for (std::int64_t i = 0; i < count; ++i) {
    fn(i);
  }
}

}  // namespace fracperc
