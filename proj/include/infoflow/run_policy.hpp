#pragma once

#include <exception>
#include <mutex>

namespace infoflow {

/// Controls whether the per-step / per-pair kernels run under OpenMP.
/// max_threads = 0 means "decide from INFOFLOW_THREADS, else OpenMP default".
/// Serial and parallel runs of the same kernel produce bit-identical
/// results: every loop index writes only its own output slot.
struct RunPolicy {
  bool parallel = true;
  int max_threads = 0;

  static RunPolicy serial() { return RunPolicy{false, 1}; }
};

/// Thread count a kernel will actually use under this policy.
int effective_threads(const RunPolicy& policy);

namespace detail {

void run_indexed_parallel(int n, int threads, void* ctx, void (*body)(void*, int));

/// Runs body(i) for i in [0, n), possibly across OpenMP threads.
/// Exceptions thrown by any iteration are captured and rethrown once.
template <typename F>
void parallel_for(int n, const RunPolicy& policy, F&& body) {
  const int threads = effective_threads(policy);
  if (threads <= 1 || n < 2) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  struct Ctx {
    F* f;
    std::mutex mutex;
    std::exception_ptr error;
  } ctx{&body, {}, nullptr};
  run_indexed_parallel(n, threads, &ctx, [](void* p, int i) {
    auto* c = static_cast<Ctx*>(p);
    try {
      (*c->f)(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(c->mutex);
      if (!c->error) c->error = std::current_exception();
    }
  });
  if (ctx.error) std::rethrow_exception(ctx.error);
}

}  // namespace detail
}  // namespace infoflow
