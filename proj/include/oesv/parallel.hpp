#ifndef OESV_PARALLEL_HPP_
#define OESV_PARALLEL_HPP_

#include <exception>
#include <mutex>

#ifdef OESV_HAVE_OPENMP
#include <omp.h>
#endif

namespace oesv {

/// Runs body(i) for i in [0, n). With OpenMP the iterations are spread over
/// threads; the first exception thrown by any iteration is rethrown on the
/// calling thread once the loop has finished.
template <class F>
void parallel_for(long n, F&& body) {
#ifdef OESV_HAVE_OPENMP
  if (n > 64 && omp_get_max_threads() > 1) {
    std::exception_ptr err;
    std::mutex m;
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(m);
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
    return;
  }
#endif
  for (long i = 0; i < n; ++i) body(i);
}

/// Number of worker threads used by parallel_for.
inline int num_threads() {
#ifdef OESV_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Sets the worker count (no-op without OpenMP).
inline void set_num_threads(int n) {
#ifdef OESV_HAVE_OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

}  // namespace oesv

#endif  // OESV_PARALLEL_HPP_
