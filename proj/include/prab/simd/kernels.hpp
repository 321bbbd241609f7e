#pragma once

#include <cstddef>

namespace prab::simd {

enum class Isa { Scalar, Avx2, Neon };

// out[i] = sum_n coef[n] x[i]^n (Horner, fused multiply-add) when x[i] <= x_cut, else 0.
using HornerFn = void (*)(const double* coef, std::size_t n_coef, const double* x, std::size_t n_x,
                          double x_cut, double* out);

// acc[i] += sum_r w[r] rows[r * stride + i], rows accumulated in order r = 0, 1, ...
using RowSumFn = void (*)(const double* rows, std::size_t n_rows, std::size_t stride,
                          const double* w, double* acc, std::size_t len);

struct Dispatch {
  Isa isa;
  HornerFn horner_batch;
  RowSumFn weighted_row_sum;
};

bool isa_supported(Isa isa);
const char* isa_name(Isa isa);

// Best supported variant, unless PRAB_SIMD=scalar is set in the environment.
const Dispatch& kernels();
// A specific variant; throws DomainError when the CPU or build lacks it.
const Dispatch& kernels(Isa isa);

namespace detail {
void horner_batch_scalar(const double*, std::size_t, const double*, std::size_t, double, double*);
void weighted_row_sum_scalar(const double*, std::size_t, std::size_t, const double*, double*,
                             std::size_t);
#if defined(PRAB_HAVE_AVX2)
void horner_batch_avx2(const double*, std::size_t, const double*, std::size_t, double, double*);
void weighted_row_sum_avx2(const double*, std::size_t, std::size_t, const double*, double*,
                           std::size_t);
#endif
#if defined(PRAB_HAVE_NEON)
void horner_batch_neon(const double*, std::size_t, const double*, std::size_t, double, double*);
void weighted_row_sum_neon(const double*, std::size_t, std::size_t, const double*, double*,
                           std::size_t);
#endif
}  // namespace detail

}  // namespace prab::simd
