#include "prab/operators.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "prab/error.hpp"
#include "prab/quadrature.hpp"
#include "prab/specfun.hpp"

namespace prab {

namespace {

constexpr int kChebNodes = 17;
constexpr double kLocalFraction = 0.1;

void require_t(double t) {
  if (!(t > 0) || !std::isfinite(t))
    throw Error(ErrorKind::DomainError, "operator needs t > 0, got " + std::to_string(t));
}

struct Sums {
  double value = 0.0;
  double magnitude = 0.0;
};

Sums integral_sums(const TimeFunction& g, double t, const IntegralOrder& o,
                   const PrabhakarSeries& E, const QuadratureSpec& q) {
  const GradedRule r = graded_rule_hi(0.0, t, o.beta - 1, q);
  Sums s;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double tau = r.to_hi[i];
    const double k = std::pow(tau, o.beta - 1) * E(o.delta * std::pow(tau, o.alpha));
    const double v = r.w[i] * k * g.eval(r.s[i]);
    s.value += v;
    s.magnitude += std::abs(v);
  }
  return s;
}

void richardson_check(double coarse, const Sums& fine, const SeriesControl& ctl, const char* what) {
  const double diff = std::abs(fine.value - coarse);
  if (diff > 10 * ctl.rel_tol * fine.magnitude + ctl.abs_tol)
    throw Error(ErrorKind::QuadratureFailure,
                std::string(what) + ": doubling the panels moved the result by " + std::to_string(diff));
}

// Barycentric interpolation on Chebyshev points of the first kind.
double barycentric(const std::vector<double>& nodes, const std::vector<double>& bw,
                   const std::vector<double>& vals, double x) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double d = x - nodes[i];
    if (d == 0.0) return vals[i];
    const double c = bw[i] / d;
    num += c * vals[i];
    den += c;
  }
  return num / den;
}

// Integral of k'(tau) (g(t - tau) - g(t)) over [0, tau0], with g replaced by its Chebyshev
// interpolant so the difference quotient never forms g(t - tau) - g(t) at tiny tau.
double local_part(const TimeFunction& g, double t, double tau0, const FracParams& p,
                  const SeriesControl& ctl) {
  const int n = kChebNodes;
  std::vector<double> nodes(n), bw(n), gv(n), dv(n);
  for (int i = 0; i < n; ++i) {
    const double th = (2 * i + 1) * std::numbers::pi / (2 * n);
    nodes[i] = 0.5 * tau0 * (1 + std::cos(th));
    bw[i] = (i % 2 ? -1.0 : 1.0) * std::sin(th);
    gv[i] = g.eval(t - nodes[i]);
  }
  const double g0 = barycentric(nodes, bw, gv, 0.0);
  for (int i = 0; i < n; ++i) dv[i] = (gv[i] - g0) / nodes[i];

  // k'(tau) tau = sum_j c_j tau^{alpha j - beta}, c_j = (-gamma)_j delta^j / (j! Gamma(alpha j - beta))
  StopRule rule(ctl.abs_tol, ctl.rel_tol);
  double sum = 0.0;
  double ratio = 1.0;
  const int nj = n / 2 + 1;
  for (int j = 0; j <= ctl.k_max; ++j) {
    if (j > 0) ratio *= (-p.gamma + j - 1) * p.delta / j;
    const double mu = p.alpha * j - p.beta;
    double term = 0.0;
    if (ratio != 0.0) {
      const Rule jr = gauss_jacobi(nj, 0.0, mu);
      double m = 0.0;
      for (int i = 0; i < nj; ++i)
        m += jr.w[i] * barycentric(nodes, bw, dv, 0.5 * tau0 * (1 + jr.x[i]));
      term = ratio * recip_gamma(mu) * std::pow(0.5 * tau0, mu + 1) * m;
    }
    sum += term;
    if (rule.push(term, sum)) return sum;
  }
  throw Error(ErrorKind::NonConvergence, "kernel-derivative series in the RL derivative");
}

Sums outer_part(const TimeFunction& g, double t, double tau0, const PrabhakarSeries& dk,
                const FracParams& p, const QuadratureSpec& q, double gt) {
  // geometric panels on [tau0, t]
  std::vector<double> breaks(q.n_panels + 1);
  const double ratio = t / tau0;
  for (int j = 0; j <= q.n_panels; ++j) breaks[j] = tau0 * std::pow(ratio, double(j) / q.n_panels);
  breaks.back() = t;
  std::vector<double> x, w;
  append_composite(breaks, t, q.nodes_per_panel, x, w);
  Sums s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double tau = x[i];
    const double kp = std::pow(tau, -p.beta - 1) * dk(p.delta * std::pow(tau, p.alpha));
    const double v = w[i] * kp * (g.eval(t - tau) - gt);
    s.value += v;
    s.magnitude += std::abs(v);
  }
  return s;
}

}  // namespace

IntegralOrder derivative_order(const FracParams& p) {
  return IntegralOrder{p.alpha, 1 - p.beta, -p.gamma, p.delta};
}

double prabhakar_integral(const TimeFunction& g, double t, const IntegralOrder& order,
                          const QuadratureSpec& q, const SeriesControl& ctl) {
  require_t(t);
  if (!(order.alpha > 0) || !(order.beta > 0))
    throw Error(ErrorKind::DomainError, "Prabhakar integral needs alpha > 0 and beta' > 0");
  q.validate();
  const PrabhakarSeries E(order.alpha, order.beta, order.gamma, ctl);
  const Sums coarse = integral_sums(g, t, order, E, q);
  QuadratureSpec q2 = q;
  q2.n_panels *= 2;
  const Sums fine = integral_sums(g, t, order, E, q2);
  richardson_check(coarse.value, fine, ctl, "Prabhakar integral");
  return fine.value;
}

double prabhakar_deriv_rl(const TimeFunction& g, double t, const FracParams& p,
                          const QuadratureSpec& q, const SeriesControl& ctl) {
  require_t(t);
  q.validate();
  const double gt = g.eval(t);
  const PrabhakarSeries k(p.alpha, 1 - p.beta, -p.gamma, ctl);
  const PrabhakarSeries dk(p.alpha, -p.beta, -p.gamma, ctl);
  const double tau0 = kLocalFraction * t;
  const double head = gt * std::pow(t, -p.beta) * k(p.delta * std::pow(t, p.alpha));
  const double local = local_part(g, t, tau0, p, ctl);
  const Sums coarse = outer_part(g, t, tau0, dk, p, q, gt);
  QuadratureSpec q2 = q;
  q2.n_panels *= 2;
  const Sums fine = outer_part(g, t, tau0, dk, p, q2, gt);
  richardson_check(coarse.value, fine, ctl, "RL derivative");
  return head + local + fine.value;
}

double prabhakar_deriv_rl_fd(const TimeFunction& g, double t, const FracParams& p,
                             const QuadratureSpec& q, const SeriesControl& ctl) {
  require_t(t);
  const double h = 1e-4 * t;
  const IntegralOrder o = derivative_order(p);
  return (prabhakar_integral(g, t + h, o, q, ctl) - prabhakar_integral(g, t - h, o, q, ctl)) /
         (2 * h);
}

double prabhakar_deriv_caputo(const TimeFunction& g, double t, const FracParams& p,
                              const QuadratureSpec& q, const SeriesControl& ctl) {
  if (!g.eval_deriv)
    throw Error(ErrorKind::MissingDerivative, "Caputo-type derivative needs g'");
  TimeFunction dg{g.eval_deriv, {}};
  return prabhakar_integral(dg, t, derivative_order(p), q, ctl);
}

double prabhakar_deriv_caputo_via_rl(const TimeFunction& g, double t, const FracParams& p,
                                     const QuadratureSpec& q, const SeriesControl& ctl) {
  const double g0 = g.eval(0.0);
  TimeFunction shifted{[&g, g0](double s) { return g.eval(s) - g0; }, {}};
  return prabhakar_deriv_rl(shifted, t, p, q, ctl);
}

double caputo_rl_residual(const TimeFunction& g, double t, const FracParams& p,
                          const QuadratureSpec& q, const SeriesControl& ctl) {
  return std::abs(prabhakar_deriv_caputo(g, t, p, q, ctl) -
                  prabhakar_deriv_caputo_via_rl(g, t, p, q, ctl));
}

DecayFit vanishing_integral_limit(const TimeFunction& g, const FracParams& p,
                                  const QuadratureSpec& q, const SeriesControl& ctl) {
  DecayFit fit;
  const IntegralOrder o = derivative_order(p);
  for (int i = 0; i < 4; ++i) {
    fit.t[i] = std::pow(10.0, -(i + 1));
    fit.values[i] = prabhakar_integral(g, fit.t[i], o, q, ctl);
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (int i = 0; i < 4; ++i) {
    if (fit.values[i] == 0.0) continue;
    const double lx = std::log(fit.t[i]);
    const double ly = std::log(std::abs(fit.values[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  if (n >= 2) fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return fit;
}

}  // namespace prab
