#include <immintrin.h>

#include <cmath>

#include "prab/simd/kernels.hpp"

namespace prab::simd::detail {

void horner_batch_avx2(const double* coef, std::size_t n_coef, const double* x, std::size_t n_x,
                       double x_cut, double* out) {
  if (n_coef == 0) {
    for (std::size_t i = 0; i < n_x; ++i) out[i] = 0.0;
    return;
  }
  const __m256d cut = _mm256_set1_pd(x_cut);
  const __m256d top = _mm256_set1_pd(coef[n_coef - 1]);
  std::size_t i = 0;
  for (; i + 8 <= n_x; i += 8) {
    const __m256d x0 = _mm256_loadu_pd(x + i);
    const __m256d x1 = _mm256_loadu_pd(x + i + 4);
    __m256d a0 = top, a1 = top;
    for (std::size_t n = n_coef - 1; n-- > 0;) {
      const __m256d c = _mm256_set1_pd(coef[n]);
      a0 = _mm256_fmadd_pd(a0, x0, c);
      a1 = _mm256_fmadd_pd(a1, x1, c);
    }
    a0 = _mm256_and_pd(a0, _mm256_cmp_pd(x0, cut, _CMP_LE_OQ));
    a1 = _mm256_and_pd(a1, _mm256_cmp_pd(x1, cut, _CMP_LE_OQ));
    _mm256_storeu_pd(out + i, a0);
    _mm256_storeu_pd(out + i + 4, a1);
  }
  for (; i + 4 <= n_x; i += 4) {
    const __m256d x0 = _mm256_loadu_pd(x + i);
    __m256d a0 = top;
    for (std::size_t n = n_coef - 1; n-- > 0;) a0 = _mm256_fmadd_pd(a0, x0, _mm256_set1_pd(coef[n]));
    a0 = _mm256_and_pd(a0, _mm256_cmp_pd(x0, cut, _CMP_LE_OQ));
    _mm256_storeu_pd(out + i, a0);
  }
  if (i < n_x) horner_batch_scalar(coef, n_coef, x + i, n_x - i, x_cut, out + i);
}

void weighted_row_sum_avx2(const double* rows, std::size_t n_rows, std::size_t stride,
                           const double* w, double* acc, std::size_t len) {
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    __m256d s0 = _mm256_loadu_pd(acc + i);
    __m256d s1 = _mm256_loadu_pd(acc + i + 4);
    for (std::size_t r = 0; r < n_rows; ++r) {
      const double* row = rows + r * stride + i;
      const __m256d wr = _mm256_set1_pd(w[r]);
      s0 = _mm256_fmadd_pd(wr, _mm256_loadu_pd(row), s0);
      s1 = _mm256_fmadd_pd(wr, _mm256_loadu_pd(row + 4), s1);
    }
    _mm256_storeu_pd(acc + i, s0);
    _mm256_storeu_pd(acc + i + 4, s1);
  }
  for (; i + 4 <= len; i += 4) {
    __m256d s0 = _mm256_loadu_pd(acc + i);
    for (std::size_t r = 0; r < n_rows; ++r)
      s0 = _mm256_fmadd_pd(_mm256_set1_pd(w[r]), _mm256_loadu_pd(rows + r * stride + i), s0);
    _mm256_storeu_pd(acc + i, s0);
  }
  if (i < len) weighted_row_sum_scalar(rows + i, n_rows, stride, w, acc + i, len - i);
}

}  // namespace prab::simd::detail
