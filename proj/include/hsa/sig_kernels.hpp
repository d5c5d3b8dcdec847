#pragma once

#include <cstddef>

namespace hsa::kern {

// dst[i*ny + j] += x[i] * y[j] — the one dense kernel behind both the
// per-segment exponential and the Chen concatenation
using OuterFn = void (*)(double* dst, const double* x, std::size_t nx, const double* y,
                         std::size_t ny);

void outer_accumulate_scalar(double* dst, const double* x, std::size_t nx, const double* y,
                             std::size_t ny);

#if defined(__x86_64__) || defined(_M_X64)
void outer_accumulate_avx2(double* dst, const double* x, std::size_t nx, const double* y,
                           std::size_t ny);
#endif
#if defined(__aarch64__) || defined(_M_ARM64)
void outer_accumulate_neon(double* dst, const double* x, std::size_t nx, const double* y,
                           std::size_t ny);
#endif

// runtime-selected variant (resolved once per process)
OuterFn active_outer();
const char* active_kernel_name();

}  // namespace hsa::kern
