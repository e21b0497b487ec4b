#pragma once

#include <cstddef>
#include <cstdint>

#ifdef TORSION_HAVE_OPENMP
#include <omp.h>
#endif

namespace torsion::parallel {

inline int max_threads() {
#ifdef TORSION_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Runs f(i) for i in [0, n); f must not throw.
template <class F>
void for_each_index(std::uint64_t n, F&& f) {
#ifdef TORSION_HAVE_OPENMP
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t i = 0; i < count; ++i) f(static_cast<std::uint64_t>(i));
#else
  for (std::uint64_t i = 0; i < n; ++i) f(i);
#endif
}

}  // namespace torsion::parallel
