#include <cmath>

#include "prab/simd/kernels.hpp"

namespace prab::simd::detail {

void horner_batch_scalar(const double* coef, std::size_t n_coef, const double* x, std::size_t n_x,
                         double x_cut, double* out) {
  for (std::size_t i = 0; i < n_x; ++i) {
    const double xi = x[i];
    if (!(xi <= x_cut) || n_coef == 0) {
      out[i] = 0.0;
      continue;
    }
    double acc = coef[n_coef - 1];
    for (std::size_t n = n_coef - 1; n-- > 0;) acc = std::fma(acc, xi, coef[n]);
    out[i] = acc;
  }
}

void weighted_row_sum_scalar(const double* rows, std::size_t n_rows, std::size_t stride,
                             const double* w, double* acc, std::size_t len) {
  for (std::size_t r = 0; r < n_rows; ++r) {
    const double* row = rows + r * stride;
    const double wr = w[r];
    for (std::size_t i = 0; i < len; ++i) acc[i] = std::fma(wr, row[i], acc[i]);
  }
}

}  // namespace prab::simd::detail
