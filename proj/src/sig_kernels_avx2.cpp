#include <immintrin.h>

#include "hsa/sig_kernels.hpp"

namespace hsa::kern {

// mul-then-add (no FMA) so results match the scalar kernel bit for bit
void outer_accumulate_avx2(double* dst, const double* x, std::size_t nx, const double* y,
                           std::size_t ny) {
  for (std::size_t i = 0; i < nx; ++i) {
    const __m256d xi = _mm256_set1_pd(x[i]);
    double* row = dst + i * ny;
    std::size_t j = 0;
    for (; j + 4 <= ny; j += 4) {
      const __m256d yj = _mm256_loadu_pd(y + j);
      const __m256d rj = _mm256_loadu_pd(row + j);
      _mm256_storeu_pd(row + j, _mm256_add_pd(rj, _mm256_mul_pd(xi, yj)));
    }
    const double xs = x[i];
    for (; j < ny; ++j) row[j] += xs * y[j];
  }
}

}  // namespace hsa::kern
