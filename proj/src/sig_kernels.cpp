#include "hsa/sig_kernels.hpp"

namespace hsa::kern {

void outer_accumulate_scalar(double* dst, const double* x, std::size_t nx, const double* y,
                             std::size_t ny) {
  for (std::size_t i = 0; i < nx; ++i) {
    const double xi = x[i];
    double* row = dst + i * ny;
    for (std::size_t j = 0; j < ny; ++j) row[j] += xi * y[j];
  }
}

namespace {

OuterFn pick() {
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2")) return &outer_accumulate_avx2;
#elif defined(__aarch64__) || defined(_M_ARM64)
  return &outer_accumulate_neon;
#endif
  return &outer_accumulate_scalar;
}

}  // namespace

OuterFn active_outer() {
  static const OuterFn fn = pick();
  return fn;
}

const char* active_kernel_name() {
  const OuterFn fn = active_outer();
#if defined(__x86_64__) || defined(_M_X64)
  if (fn == &outer_accumulate_avx2) return "avx2";
#elif defined(__aarch64__) || defined(_M_ARM64)
  if (fn == &outer_accumulate_neon) return "neon";
#endif
  return "scalar";
}

}  // namespace hsa::kern
