#pragma once

#include <functional>
#include <string>
#include <vector>

#include "prab/params.hpp"
#include "prab/problem.hpp"

namespace prab {

struct CheckResult {
  std::string module;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  double tol_scale = 1.0;  // multiplies every tolerance
  std::vector<double> betas{0.1, 0.5, 0.9};
  SeriesControl series;
  QuadratureSpec quadrature;
  std::function<void(const CheckResult&)> on_result;  // called as each check finishes
};

// Green's field vs oracle on FD nodes every t_stride steps and every x_stride interior
// nodes (walls included), at (nt, nx) and at the doubled grid (2 nt, 2 nx + 1).
struct CrossMethod {
  double rel_coarse = 0.0;
  double rel_fine = 0.0;
  double seconds = 0.0;
};
CrossMethod compare_with_oracle(const ProblemSpec& ps, int nt, int nx, int t_stride, int x_stride,
                                const QuadratureSpec& q, const SeriesControl& ctl);

std::vector<CheckResult> specfun_checks(const VerifyOptions& o);
std::vector<CheckResult> operator_checks(const VerifyOptions& o);
std::vector<CheckResult> greens_checks(const VerifyOptions& o);
std::vector<CheckResult> solver_checks(const VerifyOptions& o);
std::vector<CheckResult> oracle_checks(const VerifyOptions& o);

std::vector<CheckResult> run_invariants(const VerifyOptions& o);

}  // namespace prab
