#pragma once

#include <vector>

#include "prab/params.hpp"

namespace prab {

enum class KernelKind { Omega, Green, GreenTilde };

// Coefficient table of a foldable kernel series E(-X, y) = sum_n X^n sum_m c[n][m] y^m.
// A slice fixes y and collapses the m-sum; it also carries the cutoff x_cut beyond which
// the rounding error of the alternating X-series would exceed the noise floor, and where
// the kernel value is taken as 0.
class KernelTable {
 public:
  KernelTable(KernelKind kind, const FracParams& p, const SeriesControl& ctl);

  struct Slice {
    double y = 0.0;
    double x_cut = 0.0;
    std::vector<double> coef;  // signed, truncated to the terms that matter below x_cut
  };

  Slice slice(double y) const;
  double eval(const Slice& s, double X) const;
  void eval_batch(const Slice& s, const double* X, std::size_t n, double* out) const;

  KernelKind kind() const { return kind_; }
  int n_terms() const { return n_; }
  int m_terms() const { return m_; }

 private:
  KernelKind kind_;
  SeriesControl ctl_;
  int n_ = 0;
  int m_ = 0;
  std::vector<double> c_;     // m-major: c_[m * n_ + n]
  std::vector<double> cabs_;  // |c_|
};

}  // namespace prab
