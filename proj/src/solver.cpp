#include "prab/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "prab/error.hpp"
#include "prab/oracle.hpp"

namespace prab {

namespace {

// Panel length in units of the similarity variable X = |x - xi| tau^{-beta1}.
constexpr double kPanelX = 2.0;
constexpr int kSpaceNodes = 8;

std::string coords(double t, double x) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(t=%.17g, x=%.17g)", t, x);
  return buf;
}

}  // namespace

const char* method_name(Method m) { return m == Method::Greens ? "greens" : "oracle"; }

void ProblemSpec::validate() const {
  const double tol = 1e-12;
  if (std::abs(phi0_at(0.0) - tau_at(0.0)) > tol * std::max(1.0, std::abs(tau_at(0.0))))
    throw Error(ErrorKind::InvalidParameters, "compatibility phi0(0) == tau(0) violated");
  if (std::abs(phi1_at(0.0) - tau_at(domain.a)) > tol * std::max(1.0, std::abs(tau_at(domain.a))))
    throw Error(ErrorKind::InvalidParameters, "compatibility phi1(0) == tau(a) violated");
  if (!f) return;
  for (int j = 0; j <= 8; ++j) {
    const double x = domain.a * j / 8;
    const double g6 = std::pow(1e-6, 1 - params.beta) * f(1e-6, x);
    const double g9 = std::pow(1e-9, 1 - params.beta) * f(1e-9, x);
    if (!std::isfinite(g6) || !std::isfinite(g9) || std::abs(g9) > 10 * std::abs(g6) + 1.0)
      throw Error(ErrorKind::InvalidParameters,
                  "t^{1-beta} f(t, x) does not look bounded near t = 0 at x=" + std::to_string(x));
  }
}

double max_relative_difference(const SolutionField& a, const SolutionField& b) {
  if (a.t_nodes != b.t_nodes || a.x_nodes != b.x_nodes)
    throw Error(ErrorKind::GridMismatch, "fields sit on different grids");
  double diff = 0.0, scale = 0.0;
  for (std::size_t k = 0; k < a.values.size(); ++k) {
    diff = std::max(diff, std::abs(a.values[k] - b.values[k]));
    scale = std::max(scale, std::abs(a.values[k]));
  }
  return scale > 0 ? diff / scale : diff;
}

GreensSolver::GreensSolver(const ProblemSpec& ps, const QuadratureSpec& q, const SeriesControl& ctl)
    : ps_(ps), q_(q), ctl_(ctl), gk_(ps.domain, ps.params, ctl) {
  q.validate();
  omega_cut0_ = gk_.table(KernelKind::Omega).slice(0.0).x_cut;
}

void GreensSolver::support_rule(double x, double R, double h, std::vector<double>& xi,
                                std::vector<double>& w) const {
  const double a = ps_.domain.a;
  std::vector<std::pair<double, double>> iv;
  std::vector<double> breaks{0.0, a};
  const int N = ctl_.n_images;
  for (int n = -N; n <= N; ++n) {
    for (double c : {x + 2 * a * n, 2 * a * n - x}) {
      const double lo = std::max(0.0, c - R), hi = std::min(a, c + R);
      if (lo >= hi) continue;
      iv.emplace_back(lo, hi);
      breaks.push_back(lo);
      breaks.push_back(hi);
      if (c > 0 && c < a) breaks.push_back(c);
    }
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  std::vector<double> seg;
  xi.clear();
  w.clear();
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    const double mid = 0.5 * (breaks[k] + breaks[k + 1]);
    const bool inside = std::any_of(iv.begin(), iv.end(),
                                    [mid](const auto& p) { return mid > p.first && mid < p.second; });
    if (!inside) continue;
    seg = {breaks[k], breaks[k + 1]};
    append_composite(seg, h, kSpaceNodes, xi, w);
  }
}

void GreensSolver::image_batch(const KernelTable& tab, const KernelTable::Slice& sl, double s,
                               double x, double R, const std::vector<double>& xi,
                               std::vector<double>& out) const {
  const double a = ps_.domain.a;
  const std::size_t m = xi.size();
  out.assign(m, 0.0);
  buf_x_.resize(m);
  buf_v_.resize(m);
  const int N = ctl_.n_images;
  for (int n = -N; n <= N; ++n) {
    const double c1 = x + 2 * a * n;   // |x - xi + 2an| = |xi - c1|
    const double c2 = 2 * a * n - x;   // |x + xi - 2an| = |xi - c2|
    if (c1 - R < a && c1 + R > 0) {
      for (std::size_t i = 0; i < m; ++i) buf_x_[i] = std::abs((x - xi[i]) + 2 * a * n) * s;
      tab.eval_batch(sl, buf_x_.data(), m, buf_v_.data());
      for (std::size_t i = 0; i < m; ++i) out[i] += buf_v_[i];
    }
    if (c2 - R < a && c2 + R > 0) {
      for (std::size_t i = 0; i < m; ++i) buf_x_[i] = std::abs((x + xi[i]) - 2 * a * n) * s;
      tab.eval_batch(sl, buf_x_.data(), m, buf_v_.data());
      for (std::size_t i = 0; i < m; ++i) out[i] -= buf_v_[i];
    }
  }
}

double GreensSolver::z(double t, double x) const {
  if (!(t > 0)) throw Error(ErrorKind::DomainError, "initial-data part needs t > 0");
  if (!ps_.tau) return 0.0;
  const double a = ps_.domain.a;
  if (x <= 0 || x >= a) return 0.0;
  const KernelTable& tab = gk_.table(KernelKind::GreenTilde);
  const auto sl = tab.slice(gk_.y_of(t));
  const double s = std::pow(t, -ps_.params.beta1);
  const double R = sl.x_cut / s;
  std::vector<double> xi, w, k;
  support_rule(x, R, kPanelX / s, xi, w);
  image_batch(tab, sl, s, x, R, xi, k);
  double sum = 0.0;
  for (std::size_t i = 0; i < xi.size(); ++i) sum += w[i] * ps_.tau(xi[i]) * k[i];
  return 0.5 * std::pow(t, -ps_.params.beta1) * sum;
}

const GreensSolver::TimeCache& GreensSolver::prepare(double t) {
  if (cache_.t == t) return cache_;
  cache_.t = t;
  // f G ~ (t - eta)^{beta - 1} after the xi-integral; bounded data at eta = 0.
  cache_.rule = two_sided_rule(0.0, t, 0.0, ps_.params.beta - 1, q_);
  const KernelTable& tab = gk_.table(KernelKind::Green);
  cache_.slices.clear();
  cache_.slices.reserve(cache_.rule.size());
  for (std::size_t i = 0; i < cache_.rule.size(); ++i)
    cache_.slices.push_back(tab.slice(gk_.y_of(cache_.rule.to_hi[i])));
  return cache_;
}

double GreensSolver::forcing_part(double t, double x) {
  if (!ps_.f) return 0.0;
  const double a = ps_.domain.a;
  if (x <= 0 || x >= a) return 0.0;
  const TimeCache& tc = prepare(t);
  const KernelTable& tab = gk_.table(KernelKind::Green);
  const double b1 = ps_.params.beta1;
  std::vector<double> xi, w, k;
  double total = 0.0;
  for (std::size_t i = 0; i < tc.rule.size(); ++i) {
    const double eta = tc.rule.s[i];
    const double tau = tc.rule.to_hi[i];
    const auto& sl = tc.slices[i];
    const double s = std::pow(tau, -b1);
    const double R = sl.x_cut / s;
    support_rule(x, R, kPanelX / s, xi, w);
    image_batch(tab, sl, s, x, R, xi, k);
    double inner = 0.0;
    for (std::size_t j = 0; j < xi.size(); ++j) inner += w[j] * ps_.f(eta, xi[j]) * k[j];
    total += tc.rule.w[i] * 0.5 * std::pow(tau, b1 - 1) * inner;
  }
  return total;
}

double GreensSolver::wall_integral(double t, double d,
                                   const std::function<double(double)>& phi) const {
  const double b1 = ps_.params.beta1;
  const double x_lo = d * std::pow(t, -b1);
  const double x_hi = omega_cut0_;
  if (x_lo >= x_hi) return 0.0;
  // X = d tau^{-beta1}; omega dtau = Omega(X, y) dX / (beta1 X). Panels are capped in X and
  // in tau so the data phi(t - tau) stays resolved where tau is large.
  std::vector<double> breaks{x_lo};
  double X = x_lo;
  while (X < x_hi) {
    double step = 0.5;
    const double tau = std::pow(d / X, 1 / b1);
    if (tau > t / 16) step = std::min(step, d * std::pow(tau - t / 16, -b1) - X);
    X = std::min(x_hi, X + step);
    breaks.push_back(X);
  }
  std::vector<double> xs, ws;
  append_composite(breaks, 1.0, kSpaceNodes, xs, ws);
  const KernelTable& tab = gk_.table(KernelKind::Omega);
  double sum = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double tau = std::pow(d / xs[i], 1 / b1);
    const auto sl = tab.slice(gk_.y_of(tau));
    const double om = tab.eval(sl, xs[i]);
    if (om == 0.0) continue;
    sum += ws[i] * phi(t - tau) * om / (b1 * xs[i]);
  }
  return sum;
}

double GreensSolver::boundary_part(double t, double x) const {
  const double a = ps_.domain.a;
  if (x <= 0) return ps_.phi0_at(t);
  if (x >= a) return ps_.phi1_at(t);
  double sum = 0.0;
  const int N = ctl_.n_images;
  for (int n = -N; n <= N; ++n) {
    if (ps_.phi0) {
      const double c = x + 2 * n * a;
      sum += (c > 0 ? 1.0 : -1.0) * wall_integral(t, std::abs(c), ps_.phi0);
    }
    if (ps_.phi1) {
      const double c = x + (2 * n + 1) * a;
      sum -= (c > 0 ? 1.0 : -1.0) * wall_integral(t, std::abs(c), ps_.phi1);
    }
  }
  return sum;
}

double GreensSolver::y(double t, double x) {
  if (!(t > 0)) throw Error(ErrorKind::DomainError, "boundary/forcing part needs t > 0");
  if (x <= 0) return ps_.phi0_at(t);
  if (x >= ps_.domain.a) return ps_.phi1_at(t);
  return boundary_part(t, x) + forcing_part(t, x);
}

double solve_y(const ProblemSpec& ps, double t, double x, const QuadratureSpec& q,
               const SeriesControl& ctl) {
  GreensSolver s(ps, q, ctl);
  return s.y(t, x);
}

double solve_z(const ProblemSpec& ps, double t, double x, const SeriesControl& ctl) {
  GreensSolver s(ps, QuadratureSpec{}, ctl);
  return s.z(t, x);
}

SolutionField solve_u(const ProblemSpec& ps, const std::vector<double>& t_nodes,
                      const std::vector<double>& x_nodes, const QuadratureSpec& q,
                      const SeriesControl& ctl) {
  for (double t : t_nodes)
    if (!(t > 0) || t > ps.domain.T * (1 + 1e-12))
      throw Error(ErrorKind::DomainError, "time nodes must lie in (0, T]");
  for (double x : x_nodes)
    if (x < 0 || x > ps.domain.a * (1 + 1e-12))
      throw Error(ErrorKind::DomainError, "space nodes must lie in [0, a]");
  GreensSolver s(ps, q, ctl);
  SolutionField field;
  field.t_nodes = t_nodes;
  field.x_nodes = x_nodes;
  field.values.resize(t_nodes.size() * x_nodes.size());
  field.method = Method::Greens;
  field.params = ps.params;
  field.domain = ps.domain;
  for (std::size_t i = 0; i < t_nodes.size(); ++i) {
    for (std::size_t j = 0; j < x_nodes.size(); ++j) {
      double v;
      try {
        v = s.u(t_nodes[i], x_nodes[j]);
      } catch (const Error& e) {
        throw Error(ErrorKind::NodeFailure, "node " + coords(t_nodes[i], x_nodes[j]) + ": " + e.what());
      }
      if (!std::isfinite(v))
        throw Error(ErrorKind::NodeFailure, "non-finite value at node " + coords(t_nodes[i], x_nodes[j]));
      field.at(i, j) = v;
    }
  }
  return field;
}

VerifyReport verify_solution(const ProblemSpec& ps, const SolutionField& field,
                             const QuadratureSpec&, const SeriesControl& ctl) {
  VerifyReport r;
  const auto& tn = field.t_nodes;
  const auto& xn = field.x_nodes;
  const std::size_t nt = tn.size(), nx = xn.size();
  if (nt == 0 || nx == 0) return r;
  const double a = ps.domain.a;
  for (std::size_t i = 0; i < nt; ++i) {
    double left = field.at(i, 0), right = field.at(i, nx - 1);
    if (nx >= 2 && xn[0] > 0)
      left = field.at(i, 0) - xn[0] * (field.at(i, 1) - field.at(i, 0)) / (xn[1] - xn[0]);
    if (nx >= 2 && xn[nx - 1] < a)
      right = field.at(i, nx - 1) +
              (a - xn[nx - 1]) * (field.at(i, nx - 1) - field.at(i, nx - 2)) / (xn[nx - 1] - xn[nx - 2]);
    r.boundary_error = std::max({r.boundary_error, std::abs(left - ps.phi0_at(tn[i])),
                                 std::abs(right - ps.phi1_at(tn[i]))});
  }
  for (std::size_t j = 0; j < nx; ++j)
    r.initial_error = std::max(r.initial_error, std::abs(field.at(0, j) - ps.tau_at(xn[j])));

  // Residual only on uniform grids that include both walls.
  if (nt < 4 || nx < 6 || xn.front() != 0.0) return r;
  const double dt = tn[0], dx = xn[1] - xn[0];
  for (std::size_t i = 0; i < nt; ++i)
    if (std::abs(tn[i] - (i + 1) * dt) > 1e-10 * tn.back()) return r;
  for (std::size_t j = 0; j < nx; ++j)
    if (std::abs(xn[j] - j * dx) > 1e-10 * a) return r;
  const FdGrid grid = FdGrid::make(static_cast<int>(nt), static_cast<int>(nx) - 2,
                                   DomainSpec{xn.back(), tn.back()});
  std::vector<double> init(nx);
  for (std::size_t j = 0; j < nx; ++j) init[j] = ps.tau_at(xn[j]);
  const std::vector<double> lu = fd_apply_operator(field, init, grid, ps.params, ctl);
  double res = 0.0, umax = 0.0, fmax = 0.0;
  for (std::size_t i = 0; i < nt; ++i) {
    for (std::size_t j = 1; j + 1 < nx; ++j) {
      const double fv = ps.f_at(tn[i], xn[j]);
      res = std::max(res, std::abs(lu[i * (nx - 2) + (j - 1)] - fv));
      fmax = std::max(fmax, std::abs(fv));
      umax = std::max(umax, std::abs(field.at(i, j)));
    }
  }
  r.residual = res;
  const double scale = std::max(umax, fmax);
  r.residual_scaled = scale > 0 ? res / scale : res;
  return r;
}

}  // namespace prab
