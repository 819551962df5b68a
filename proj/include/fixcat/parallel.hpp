#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fixcat {

// Data-parallel sweep over [0, n).  `fn` must be safe to call concurrently on
// distinct indices.  With `parallel == false` (or without OpenMP) this runs
// the plain serial loop; tests compare both paths on every sweep kernel.
template <typename Fn>
void parallel_for(std::size_t n, bool parallel, Fn&& fn) {
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(n); ++i) fn(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)parallel;
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace fixcat
