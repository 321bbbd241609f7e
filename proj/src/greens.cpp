#include "prab/greens.hpp"

#include <cmath>
#include <string>

#include "prab/error.hpp"
#include "prab/quadrature.hpp"
#include "prab/specfun.hpp"

namespace prab {

namespace {

void require_tau(double tau, const char* what) {
  if (!(tau > 0) || !std::isfinite(tau))
    throw Error(ErrorKind::DomainError, std::string(what) + " needs t - eta > 0");
}

void check_tail(const KernelValue& kv, const SeriesControl& ctl, const char* what) {
  if (kv.truncation_estimate > ctl.abs_tol)
    throw Error(ErrorKind::NonConvergence,
                std::string(what) + ": image sum tail " + std::to_string(kv.truncation_estimate) +
                    " exceeds abs_tol; raise n_images");
}

}  // namespace

GreensKernels::GreensKernels(const DomainSpec& d, const FracParams& p, const SeriesControl& ctl)
    : d_(d),
      p_(p),
      ctl_(ctl),
      omega_(KernelKind::Omega, p, ctl),
      green_(KernelKind::Green, p, ctl),
      tilde_(KernelKind::GreenTilde, p, ctl) {}

const KernelTable& GreensKernels::table(KernelKind kind) const {
  switch (kind) {
    case KernelKind::Omega: return omega_;
    case KernelKind::Green: return green_;
    case KernelKind::GreenTilde: return tilde_;
  }
  return green_;
}

double GreensKernels::y_of(double tau) const { return p_.delta * std::pow(tau, p_.alpha); }

double GreensKernels::omega(double tau, double x) const {
  require_tau(tau, "omega");
  if (x < 0) throw Error(ErrorKind::DomainError, "omega needs x >= 0");
  const auto sl = omega_.slice(y_of(tau));
  return omega_.eval(sl, x * std::pow(tau, -p_.beta1)) / tau;
}

double GreensKernels::v(double tau, double dist) const {
  require_tau(tau, "free-space kernel");
  const auto sl = green_.slice(y_of(tau));
  return 0.5 * std::pow(tau, p_.beta1 - 1) * green_.eval(sl, std::abs(dist) * std::pow(tau, -p_.beta1));
}

KernelValue GreensKernels::gxi(double tau, double x, Wall side) const {
  require_tau(tau, "boundary kernel");
  const auto sl = omega_.slice(y_of(tau));
  const double s = std::pow(tau, -p_.beta1);
  const double a = d_.a;
  const double shift = side == Wall::Left ? 0.0 : a;
  auto term = [&](int n) {
    const double c = x + 2.0 * n * a + shift;
    const double sg = c > 0 ? 1.0 : (c < 0 ? -1.0 : 0.0);
    return sg * omega_.eval(sl, std::abs(c) * s);
  };
  KernelValue kv;
  const int N = ctl_.n_images;
  // sum from the outside in so the result does not depend on the window placement
  for (int k = N; k >= 1; --k) kv.value += term(k) + term(-k);
  kv.value += term(0);
  kv.value /= tau;
  kv.truncation_estimate = std::abs(term(N + 1) + term(-N - 1)) / tau;
  return kv;
}

KernelValue GreensKernels::image_difference(const KernelTable& tab, const KernelTable::Slice& sl,
                                            double scale, double x, double xi) const {
  // reflect about the midpoint so both walls cancel exactly
  if (x > 0.5 * d_.a) {
    x = d_.a - x;
    xi = d_.a - xi;
  }
  const double a2 = 2.0 * d_.a;
  auto pair = [&](int n) {
    const double u = (x - xi) + a2 * n;
    const double w = (x + xi) - a2 * n;
    return tab.eval(sl, std::abs(u) * scale) - tab.eval(sl, std::abs(w) * scale);
  };
  KernelValue kv;
  const int N = ctl_.n_images;
  for (int k = N; k >= 1; --k) kv.value += pair(k) + pair(-k);
  kv.value += pair(0);
  kv.truncation_estimate = std::abs(pair(N + 1) + pair(-N - 1));
  return kv;
}

KernelValue GreensKernels::g(double tau, double x, double xi) const {
  require_tau(tau, "Green's function");
  const auto sl = green_.slice(y_of(tau));
  KernelValue kv = image_difference(green_, sl, std::pow(tau, -p_.beta1), x, xi);
  const double pre = 0.5 * std::pow(tau, p_.beta1 - 1);
  kv.value *= pre;
  kv.truncation_estimate *= pre;
  return kv;
}

KernelValue GreensKernels::g_tilde(double t, double x, double xi) const {
  require_tau(t, "initial-data kernel");
  const auto sl = tilde_.slice(y_of(t));
  KernelValue kv = image_difference(tilde_, sl, std::pow(t, -p_.beta1), x, xi);
  const double pre = 0.5 * std::pow(t, -p_.beta1);
  kv.value *= pre;
  kv.truncation_estimate *= pre;
  return kv;
}

KernelValue GreensKernels::g_tilde_quadrature(double t, double x, double xi,
                                              const QuadratureSpec& q) const {
  require_tau(t, "initial-data kernel");
  const PrabhakarSeries k(p_.alpha, 1 - p_.beta, -p_.gamma, ctl_);
  const GradedRule r = two_sided_rule(0.0, t, -p_.beta, p_.beta1 - 1, q);
  KernelValue kv;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double eta = r.to_lo[i];
    const double tau = r.to_hi[i];
    const double ker = std::pow(eta, -p_.beta) * k(p_.delta * std::pow(eta, p_.alpha));
    const KernelValue gv = g(tau, x, xi);
    kv.value += r.w[i] * ker * gv.value;
    kv.truncation_estimate += std::abs(r.w[i] * ker) * gv.truncation_estimate;
  }
  return kv;
}

double omega_kernel(double t, double x, const FracParams& p, const SeriesControl& ctl) {
  require_tau(t, "omega");
  if (x < 0) throw Error(ErrorKind::DomainError, "omega needs x >= 0");
  const KernelTable tab(KernelKind::Omega, p, ctl);
  const auto sl = tab.slice(p.delta * std::pow(t, p.alpha));
  return tab.eval(sl, x * std::pow(t, -p.beta1)) / t;
}

KernelValue boundary_kernel_gxi(double t, double x, double eta, Wall side, const DomainSpec& d,
                                const FracParams& p, const SeriesControl& ctl) {
  if (!(eta >= 0 && eta < t)) throw Error(ErrorKind::DomainError, "boundary kernel needs 0 <= eta < t");
  if (!(x > 0 && x < d.a)) throw Error(ErrorKind::DomainError, "boundary kernel needs 0 < x < a");
  const GreensKernels gk(d, p, ctl);
  KernelValue kv = gk.gxi(t - eta, x, side);
  check_tail(kv, ctl, "boundary kernel");
  return kv;
}

KernelValue green_g(double t, double x, double eta, double xi, const DomainSpec& d,
                    const FracParams& p, const SeriesControl& ctl) {
  if (!(eta >= 0 && eta < t)) throw Error(ErrorKind::DomainError, "Green's function needs 0 <= eta < t");
  if (x < 0 || x > d.a || xi < 0 || xi > d.a)
    throw Error(ErrorKind::DomainError, "Green's function needs x, xi in [0, a]");
  const GreensKernels gk(d, p, ctl);
  KernelValue kv = gk.g(t - eta, x, xi);
  check_tail(kv, ctl, "Green's function");
  return kv;
}

KernelValue green_g_tilde(double t, double x, double xi, const DomainSpec& d, const FracParams& p,
                          const QuadratureSpec& q, const SeriesControl& ctl, TildePath path) {
  if (x < 0 || x > d.a || xi < 0 || xi > d.a)
    throw Error(ErrorKind::DomainError, "initial-data kernel needs x, xi in [0, a]");
  const GreensKernels gk(d, p, ctl);
  KernelValue kv = path == TildePath::ClosedForm ? gk.g_tilde(t, x, xi)
                                                 : gk.g_tilde_quadrature(t, x, xi, q);
  check_tail(kv, ctl, "initial-data kernel");
  return kv;
}

KernelValue green_g_tilde_checked(double t, double x, double xi, const DomainSpec& d,
                                  const FracParams& p, const QuadratureSpec& q,
                                  const SeriesControl& ctl) {
  const KernelValue a = green_g_tilde(t, x, xi, d, p, q, ctl, TildePath::ClosedForm);
  const KernelValue b = green_g_tilde(t, x, xi, d, p, q, ctl, TildePath::Quadrature);
  const double diff = std::abs(a.value - b.value);
  if (diff > 1e-6 * std::abs(a.value) + ctl.noise_floor * 1e-2)
    throw Error(ErrorKind::PathMismatch, "closed form " + std::to_string(a.value) +
                                             " vs quadrature " + std::to_string(b.value));
  return a;
}

double free_space_v(double t, double x, double eta, double xi, const FracParams& p,
                    const SeriesControl& ctl) {
  const double tau = t - eta;
  require_tau(tau, "free-space kernel");
  const KernelTable tab(KernelKind::Green, p, ctl);
  const auto sl = tab.slice(p.delta * std::pow(tau, p.alpha));
  return 0.5 * std::pow(tau, p.beta1 - 1) * tab.eval(sl, std::abs(x - xi) * std::pow(tau, -p.beta1));
}

}  // namespace prab
