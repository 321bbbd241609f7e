#pragma once

#include <optional>
#include <vector>

#include "prab/greens.hpp"
#include "prab/problem.hpp"
#include "prab/quadrature.hpp"

namespace prab {

// Evaluates the closed-form solution u = y + z. Reuses kernel tables and, for the forcing
// term, the per-time kernel slices across all x at the same t.
class GreensSolver {
 public:
  GreensSolver(const ProblemSpec& ps, const QuadratureSpec& q, const SeriesControl& ctl);

  // Boundary and forcing part.
  double y(double t, double x);
  // Initial-data part.
  double z(double t, double x) const;
  double u(double t, double x) { return y(t, x) + z(t, x); }

  double boundary_part(double t, double x) const;
  double forcing_part(double t, double x);

 private:
  struct TimeCache {
    double t = -1.0;
    GradedRule rule;
    std::vector<KernelTable::Slice> slices;
  };

  const TimeCache& prepare(double t);
  // int_0^t phi(t - tau) omega(tau, d) dtau
  double wall_integral(double t, double d, const std::function<double(double)>& phi) const;
  // sum over images of K(|x - xi + 2an| s) - K(|x + xi - 2an| s) at every xi
  void image_batch(const KernelTable& tab, const KernelTable::Slice& sl, double s, double x,
                   double R, const std::vector<double>& xi, std::vector<double>& out) const;
  void support_rule(double x, double R, double h, std::vector<double>& xi,
                    std::vector<double>& w) const;

  ProblemSpec ps_;
  QuadratureSpec q_;
  SeriesControl ctl_;
  GreensKernels gk_;
  double omega_cut0_;
  TimeCache cache_;
  mutable std::vector<double> buf_x_, buf_v_;
};

double solve_y(const ProblemSpec& ps, double t, double x, const QuadratureSpec& q,
               const SeriesControl& ctl);
double solve_z(const ProblemSpec& ps, double t, double x, const SeriesControl& ctl);

SolutionField solve_u(const ProblemSpec& ps, const std::vector<double>& t_nodes,
                      const std::vector<double>& x_nodes, const QuadratureSpec& q,
                      const SeriesControl& ctl);

struct VerifyReport {
  double boundary_error = 0.0;
  double initial_error = 0.0;
  std::optional<double> residual;         // max |D_t u - u_xx - f| over interior nodes
  std::optional<double> residual_scaled;  // residual / max(max|u|, max|f|)
};

// The residual is reported when the field sits on a uniform grid t_n = n dt, x_i = i dx
// including both walls; the operator is the oracle's discrete one with u(0, .) = tau.
VerifyReport verify_solution(const ProblemSpec& ps, const SolutionField& field,
                             const QuadratureSpec& q, const SeriesControl& ctl);

}  // namespace prab
