#include "infoflow/run_policy.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace infoflow {

namespace {

int env_thread_cap() {
  const char* v = std::getenv("INFOFLOW_THREADS");
  if (!v || !*v) return 0;
  try {
    int n = std::stoi(v);
    return n > 0 ? n : 1;
  } catch (...) {
    return 0;  // unparsable values are ignored
  }
}

}  // namespace

int effective_threads(const RunPolicy& policy) {
  if (!policy.parallel) return 1;
#ifdef _OPENMP
  int n = omp_get_max_threads();
#else
  int n = 1;
#endif
  if (policy.max_threads > 0 && policy.max_threads < n) n = policy.max_threads;
  const int cap = env_thread_cap();
  if (cap > 0 && cap < n) n = cap;
  return n;
}

namespace detail {

void run_indexed_parallel(int n, int threads, void* ctx, void (*body)(void*, int)) {
#ifdef _OPENMP
#pragma omp parallel for num_threads(threads) schedule(dynamic)
  for (int i = 0; i < n; ++i) body(ctx, i);
#else
  (void)threads;
  for (int i = 0; i < n; ++i) body(ctx, i);
#endif
}

}  // namespace detail
}  // namespace infoflow
