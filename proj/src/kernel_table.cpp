#include "prab/kernel_table.hpp"

#include <cfloat>
#include <cmath>
#include <string>

#include "prab/error.hpp"
#include "prab/simd/kernels.hpp"
#include "prab/specfun.hpp"

namespace prab {

namespace {

E12Params params_for(KernelKind kind, const FracParams& p) {
  switch (kind) {
    case KernelKind::Omega: return e12_omega(p);
    case KernelKind::Green: return e12_green(p);
    case KernelKind::GreenTilde: return e12_green_tilde(p);
  }
  return e12_green(p);
}

double horner(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (std::size_t n = c.size(); n-- > 0;) acc = std::fma(acc, x, c[n]);
  return acc;
}

}  // namespace

KernelTable::KernelTable(KernelKind kind, const FracParams& p, const SeriesControl& ctl)
    : kind_(kind), ctl_(ctl) {
  ctl.validate();
  const E12Params e = params_for(kind, p);
  if (!e.foldable() || e.a4 != 1 || e.d4 != 1 || e.b3 != 1 || e.d5 != 1)
    throw Error(ErrorKind::UnfoldablePole, "kernel table needs a foldable instantiation");
  if (!(e.delta1() > 0) || !(e.delta2() > 0))
    throw Error(ErrorKind::DivergentParameters, "kernel instantiation fails Delta1, Delta2 > 0");
  n_ = ctl.k_max;
  m_ = ctl.i_max;
  c_.assign(static_cast<std::size_t>(n_) * m_, 0.0);
  cabs_.assign(c_.size(), 0.0);
  for (int n = 0; n < n_; ++n) {
    const double base = e.d3 + e.a3 * n;
    const double lead = (n % 2 ? -1.0 : 1.0) * recip_gamma(n + 1.0);
    double poch = 1.0;
    for (int m = 0; m < m_; ++m) {
      if (m > 0) poch *= base + m - 1;
      const double v = lead * recip_gamma(e.a2 * n + e.b2 * m + e.d2) * poch * recip_gamma(m + 1.0);
      c_[static_cast<std::size_t>(m) * n_ + n] = v;
      cabs_[static_cast<std::size_t>(m) * n_ + n] = std::abs(v);
    }
  }
}

KernelTable::Slice KernelTable::slice(double y) const {
  std::vector<double> wy(m_), wa(m_);
  double ym = 1.0;
  for (int m = 0; m < m_; ++m) {
    wy[m] = ym;
    wa[m] = std::abs(ym);
    ym *= y;
  }
  std::vector<double> coef(n_, 0.0), mag(n_, 0.0);
  const auto& k = simd::kernels();
  k.weighted_row_sum(c_.data(), m_, n_, wy.data(), coef.data(), n_);
  k.weighted_row_sum(cabs_.data(), m_, n_, wa.data(), mag.data(), n_);

  // Largest X whose alternating-sum rounding error stays under the noise floor.
  auto noise = [&](double X) { return DBL_EPSILON * horner(mag, X); };
  double lo = 0.0, hi = 1.0;
  while (noise(hi) <= ctl_.noise_floor && hi < 1e6) {
    lo = hi;
    hi *= 2;
  }
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    (noise(mid) <= ctl_.noise_floor ? lo : hi) = mid;
  }
  double x_cut = lo;
  // The last retained X-powers must stay negligible up to the cutoff.
  const double tiny = 1e-3 * ctl_.noise_floor;
  for (int n = n_ - 3; n < n_; ++n)
    if (mag[n] > 0) x_cut = std::min(x_cut, std::pow(tiny / mag[n], 1.0 / n));

  // Every retained delta-power row must have converged for the terms that matter.
  int n_eff = 0;
  for (int n = 0; n < n_; ++n)
    if (mag[n] * std::pow(x_cut, n) > tiny) n_eff = n + 1;
  for (int n = 0; n < n_eff; ++n) {
    double tail = 0.0;
    for (int m = m_ - 3; m < m_; ++m)
      tail = std::max(tail, cabs_[static_cast<std::size_t>(m) * n_ + n] * wa[m]);
    if (tail > ctl_.abs_tol + ctl_.rel_tol * mag[n])
      throw Error(ErrorKind::NonConvergence,
                  "kernel series in the time argument needs more than i_max terms at y=" +
                      std::to_string(y));
  }
  coef.resize(std::max(n_eff, 1));
  return Slice{y, x_cut, std::move(coef)};
}

double KernelTable::eval(const Slice& s, double X) const {
  double out;
  simd::kernels().horner_batch(s.coef.data(), s.coef.size(), &X, 1, s.x_cut, &out);
  return out;
}

void KernelTable::eval_batch(const Slice& s, const double* X, std::size_t n, double* out) const {
  simd::kernels().horner_batch(s.coef.data(), s.coef.size(), X, n, s.x_cut, out);
}

}  // namespace prab
