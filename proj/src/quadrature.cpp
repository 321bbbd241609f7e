#include "prab/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "prab/error.hpp"

namespace prab {

namespace {

Rule compute_legendre(int n) {
  Rule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    r.x[n - 1 - i] = x;
    r.w[n - 1 - i] = 2.0 / ((1 - x * x) * dp * dp);
  }
  return r;
}

void append_mapped(const Rule& base, double lo, double hi, std::vector<double>& x,
                   std::vector<double>& w) {
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  for (std::size_t i = 0; i < base.x.size(); ++i) {
    x.push_back(mid + half * base.x[i]);
    w.push_back(half * base.w[i]);
  }
}

// Half rule: gap = L u^q for u in (0, 1], uniform panels in u.
void half_rule(double L, double q, const QuadratureSpec& spec, std::vector<double>& gap,
               std::vector<double>& w) {
  const Rule& base = gauss_legendre(spec.nodes_per_panel);
  const double h = 1.0 / spec.n_panels;
  for (int j = 0; j < spec.n_panels; ++j) {
    for (std::size_t i = 0; i < base.x.size(); ++i) {
      const double u = h * (j + 0.5 * (1 + base.x[i]));
      gap.push_back(L * std::pow(u, q));
      w.push_back(0.5 * h * base.w[i] * L * q * std::pow(u, q - 1));
    }
  }
}

}  // namespace

const Rule& gauss_legendre(int n) {
  if (n < 1) throw Error(ErrorKind::DomainError, "Gauss-Legendre order must be >= 1");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Rule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<Rule>(compute_legendre(n));
  return *slot;
}

Rule gauss_jacobi(int n, double a, double b) {
  if (n < 1 || !(a > -1) || !(b > -1))
    throw Error(ErrorKind::DomainError, "Gauss-Jacobi needs n >= 1 and a, b > -1");
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 0);
  const double ab = a + b;
  diag(0) = (b - a) / (ab + 2);
  for (int k = 1; k < n; ++k) {
    const double s = 2 * k + ab;
    diag(k) = (b * b - a * a) / (s * (s + 2));
  }
  for (int k = 1; k < n; ++k) {
    const double s = 2 * k + ab;
    double v;
    if (k == 1)
      v = 4 * (1 + a) * (1 + b) / ((2 + ab) * (2 + ab) * (3 + ab));
    else
      v = 4 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1) * (s - 1));
    sub(k - 1) = std::sqrt(v);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success)
    throw Error(ErrorKind::QuadratureFailure, "Gauss-Jacobi eigenvalue solve failed");
  const double mu0 = std::exp((ab + 1) * std::log(2.0) + std::lgamma(a + 1) + std::lgamma(b + 1) -
                              std::lgamma(ab + 2));
  Rule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < n; ++i) {
    r.x[i] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    r.w[i] = mu0 * v0 * v0;
  }
  return r;
}

GradedRule two_sided_rule(double lo, double hi, double power_lo, double power_hi,
                          const QuadratureSpec& q) {
  GradedRule r;
  const double len = hi - lo;
  const double L = 0.5 * len;
  std::vector<double> gap, w;
  half_rule(L, q.grading_for(power_lo), q, gap, w);
  for (std::size_t i = 0; i < gap.size(); ++i) {
    r.s.push_back(lo + gap[i]);
    r.w.push_back(w[i]);
    r.to_lo.push_back(gap[i]);
    r.to_hi.push_back(len - gap[i]);
  }
  gap.clear();
  w.clear();
  half_rule(L, q.grading_for(power_hi), q, gap, w);
  for (std::size_t i = 0; i < gap.size(); ++i) {
    r.s.push_back(hi - gap[i]);
    r.w.push_back(w[i]);
    r.to_lo.push_back(len - gap[i]);
    r.to_hi.push_back(gap[i]);
  }
  return r;
}

GradedRule graded_rule_hi(double lo, double hi, double power_hi, const QuadratureSpec& q) {
  GradedRule r;
  const double len = hi - lo;
  std::vector<double> gap, w;
  half_rule(len, q.grading_for(power_hi), q, gap, w);
  for (std::size_t i = 0; i < gap.size(); ++i) {
    r.s.push_back(hi - gap[i]);
    r.w.push_back(w[i]);
    r.to_lo.push_back(len - gap[i]);
    r.to_hi.push_back(gap[i]);
  }
  return r;
}

void append_composite(const std::vector<double>& breaks, double max_len, int nodes,
                      std::vector<double>& x, std::vector<double>& w) {
  const Rule& base = gauss_legendre(nodes);
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    const double lo = breaks[k], hi = breaks[k + 1];
    if (!(hi > lo)) continue;
    const int panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / max_len)));
    const double h = (hi - lo) / panels;
    for (int j = 0; j < panels; ++j)
      append_mapped(base, lo + j * h, j + 1 == panels ? hi : lo + (j + 1) * h, x, w);
  }
}

}  // namespace prab
