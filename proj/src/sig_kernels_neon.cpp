#include <arm_neon.h>

#include "hsa/sig_kernels.hpp"

namespace hsa::kern {

// mul-then-add (no fused multiply-add) so results match the scalar kernel bit for bit
void outer_accumulate_neon(double* dst, const double* x, std::size_t nx, const double* y,
                           std::size_t ny) {
  for (std::size_t i = 0; i < nx; ++i) {
    const float64x2_t xi = vdupq_n_f64(x[i]);
    double* row = dst + i * ny;
    std::size_t j = 0;
    for (; j + 2 <= ny; j += 2) {
      const float64x2_t yj = vld1q_f64(y + j);
      const float64x2_t rj = vld1q_f64(row + j);
      vst1q_f64(row + j, vaddq_f64(rj, vmulq_f64(xi, yj)));
    }
    const double xs = x[i];
    for (; j < ny; ++j) row[j] += xs * y[j];
  }
}

}  // namespace hsa::kern
