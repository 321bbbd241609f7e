#include <arm_neon.h>

#include "prab/simd/kernels.hpp"

namespace prab::simd::detail {

void horner_batch_neon(const double* coef, std::size_t n_coef, const double* x, std::size_t n_x,
                       double x_cut, double* out) {
  if (n_coef == 0) {
    for (std::size_t i = 0; i < n_x; ++i) out[i] = 0.0;
    return;
  }
  const float64x2_t cut = vdupq_n_f64(x_cut);
  std::size_t i = 0;
  for (; i + 2 <= n_x; i += 2) {
    const float64x2_t xv = vld1q_f64(x + i);
    float64x2_t a = vdupq_n_f64(coef[n_coef - 1]);
    for (std::size_t n = n_coef - 1; n-- > 0;) a = vfmaq_f64(vdupq_n_f64(coef[n]), a, xv);
    const uint64x2_t keep = vcleq_f64(xv, cut);
    a = vreinterpretq_f64_u64(vandq_u64(vreinterpretq_u64_f64(a), keep));
    vst1q_f64(out + i, a);
  }
  if (i < n_x) horner_batch_scalar(coef, n_coef, x + i, n_x - i, x_cut, out + i);
}

void weighted_row_sum_neon(const double* rows, std::size_t n_rows, std::size_t stride,
                           const double* w, double* acc, std::size_t len) {
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    float64x2_t s = vld1q_f64(acc + i);
    for (std::size_t r = 0; r < n_rows; ++r)
      s = vfmaq_f64(s, vdupq_n_f64(w[r]), vld1q_f64(rows + r * stride + i));
    vst1q_f64(acc + i, s);
  }
  if (i < len) weighted_row_sum_scalar(rows + i, n_rows, stride, w, acc + i, len - i);
}

}  // namespace prab::simd::detail
