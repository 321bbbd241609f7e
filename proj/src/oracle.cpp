#include "prab/oracle.hpp"

#include <cmath>
#include <string>

#include "prab/error.hpp"
#include "prab/simd/kernels.hpp"
#include "prab/specfun.hpp"

namespace prab {

namespace {

void check_grid(const SolutionField& field, const FdGrid& g) {
  const std::size_t nt = g.nt, nx = g.nx + 2;
  if (field.t_nodes.size() != nt || field.x_nodes.size() != nx || field.values.size() != nt * nx)
    throw Error(ErrorKind::GridMismatch, "field dimensions do not match the FD grid");
  for (std::size_t n = 0; n < nt; ++n)
    if (std::abs(field.t_nodes[n] - (n + 1) * g.dt()) > 1e-10 * g.domain.T)
      throw Error(ErrorKind::GridMismatch, "time node " + std::to_string(n) + " is off the FD grid");
  for (std::size_t i = 0; i < nx; ++i)
    if (std::abs(field.x_nodes[i] - i * g.dx()) > 1e-10 * g.domain.a)
      throw Error(ErrorKind::GridMismatch, "space node " + std::to_string(i) + " is off the FD grid");
}

// history[i] = sum_{j=0}^{n-2} dW[n-j] (u^{j+1}_i - u^j_i) / dt, increments stored row-wise
void history(const WeightTable& w, const std::vector<double>& incr, int n, int nx, double dt,
             std::vector<double>& out) {
  out.assign(nx, 0.0);
  if (n < 2) return;
  std::vector<double> wts(n - 1);
  for (int j = 0; j <= n - 2; ++j) wts[j] = w.dW[n - j] / dt;
  simd::kernels().weighted_row_sum(incr.data(), n - 1, nx, wts.data(), out.data(), nx);
}

}  // namespace

FdGrid FdGrid::make(int nt, int nx, const DomainSpec& d) {
  if (nt < 4 || nx < 4) throw Error(ErrorKind::InvalidParameters, "FD grid needs nt, nx >= 4");
  return FdGrid{nt, nx, d};
}

WeightTable build_weights(const FdGrid& grid, const FracParams& p, const SeriesControl& ctl) {
  WeightTable w;
  const double dt = grid.dt();
  w.W.resize(grid.nt + 1);
  w.dW.assign(grid.nt + 1, 0.0);
  const PrabhakarSeries E(p.alpha, 2 - p.beta, -p.gamma, ctl);
  w.W[0] = 0.0;
  for (int l = 1; l <= grid.nt; ++l) {
    const double t = l * dt;
    w.W[l] = std::pow(t, 1 - p.beta) * E(p.delta * std::pow(t, p.alpha));
    w.dW[l] = w.W[l] - w.W[l - 1];
    if (!(w.dW[l] > 0)) w.nonpositive = true;
  }
  return w;
}

SolutionField fd_solve(const ProblemSpec& ps, const FdGrid& g, const SeriesControl& ctl) {
  ps.validate();
  const WeightTable w = build_weights(g, ps.params, ctl);
  const int nx = g.nx;
  const double dt = g.dt(), dx = g.dx(), idx2 = 1.0 / (dx * dx);
  const double c0 = w.dW[1] / dt;

  SolutionField field;
  field.method = Method::Oracle;
  field.params = ps.params;
  field.domain = g.domain;
  field.flagged = w.nonpositive;
  if (w.nonpositive) field.note = "non-positive convolution weight";
  field.t_nodes.resize(g.nt);
  field.x_nodes.resize(nx + 2);
  for (int n = 0; n < g.nt; ++n) field.t_nodes[n] = (n + 1) * dt;
  for (int i = 0; i < nx + 2; ++i) field.x_nodes[i] = i * dx;
  field.x_nodes.back() = g.domain.a;
  field.values.assign(static_cast<std::size_t>(g.nt) * (nx + 2), 0.0);

  std::vector<double> prev(nx), cur(nx), hist, rhs(nx), cp(nx), dp(nx);
  for (int i = 0; i < nx; ++i) prev[i] = ps.tau_at((i + 1) * dx);
  std::vector<double> incr;  // row j = u^{j+1} - u^j on interior nodes
  incr.reserve(static_cast<std::size_t>(g.nt) * nx);

  const double diag = c0 + 2 * idx2, off = -idx2;
  for (int n = 1; n <= g.nt; ++n) {
    const double t = n * dt;
    history(w, incr, n, nx, dt, hist);
    for (int i = 0; i < nx; ++i) rhs[i] = ps.f_at(t, (i + 1) * dx) + c0 * prev[i] - hist[i];
    const double left = ps.phi0_at(t), right = ps.phi1_at(t);
    rhs[0] += idx2 * left;
    rhs[nx - 1] += idx2 * right;
    // Thomas algorithm; diagonal dominance needs diag > 2 |off|, i.e. c0 > 0
    if (!(std::abs(diag) > 2 * std::abs(off)) && !field.flagged) {
      field.flagged = true;
      field.note = "diagonal dominance lost";
    }
    double piv = diag;
    if (piv == 0.0) throw Error(ErrorKind::SingularSystem, "zero pivot at step " + std::to_string(n));
    cp[0] = off / piv;
    dp[0] = rhs[0] / piv;
    for (int i = 1; i < nx; ++i) {
      piv = diag - off * cp[i - 1];
      if (piv == 0.0 || !std::isfinite(piv))
        throw Error(ErrorKind::SingularSystem, "zero pivot at step " + std::to_string(n));
      cp[i] = off / piv;
      dp[i] = (rhs[i] - off * dp[i - 1]) / piv;
    }
    cur[nx - 1] = dp[nx - 1];
    for (int i = nx - 2; i >= 0; --i) cur[i] = dp[i] - cp[i] * cur[i + 1];

    for (int i = 0; i < nx; ++i) incr.push_back(cur[i] - prev[i]);
    field.at(n - 1, 0) = left;
    for (int i = 0; i < nx; ++i) field.at(n - 1, i + 1) = cur[i];
    field.at(n - 1, nx + 1) = right;
    prev.swap(cur);
  }
  return field;
}

std::vector<double> fd_apply_operator(const SolutionField& field, const std::vector<double>& initial_row,
                                      const FdGrid& g, const FracParams& p,
                                      const SeriesControl& ctl) {
  check_grid(field, g);
  const int nx = g.nx, nt = g.nt, stride = nx + 2;
  if (static_cast<int>(initial_row.size()) != stride)
    throw Error(ErrorKind::GridMismatch, "initial row must cover all space nodes");
  const WeightTable w = build_weights(g, p, ctl);
  const double dt = g.dt(), idx2 = 1.0 / (g.dx() * g.dx());
  auto u = [&](int n, int i) { return n == 0 ? initial_row[i] : field.values[(n - 1) * stride + i]; };

  std::vector<double> incr(static_cast<std::size_t>(nt) * nx);
  for (int j = 0; j < nt; ++j)
    for (int i = 0; i < nx; ++i) incr[j * nx + i] = u(j + 1, i + 1) - u(j, i + 1);

  std::vector<double> out(static_cast<std::size_t>(nt) * nx), acc;
  for (int n = 1; n <= nt; ++n) {
    history(w, incr, n, nx, dt, acc);
    for (int i = 0; i < nx; ++i) {
      const double last = w.dW[1] / dt * incr[(n - 1) * nx + i];
      const double d2 = (u(n, i) - 2 * u(n, i + 1) + u(n, i + 2)) * idx2;
      out[(n - 1) * nx + i] = acc[i] + last - d2;
    }
  }
  return out;
}

}  // namespace prab
