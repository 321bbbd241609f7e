#pragma once

#include <vector>

#include "prab/problem.hpp"

namespace prab {

// nt time steps of size T/nt, nx interior nodes spaced a/(nx+1).
struct FdGrid {
  int nt = 64;
  int nx = 32;
  DomainSpec domain;

  static FdGrid make(int nt, int nx, const DomainSpec& d);
  double dt() const { return domain.T / nt; }
  double dx() const { return domain.a / (nx + 1); }
};

// The weights depend only on n - j: w[n][j] = dW[n - j] with dW[l] = W(l dt) - W((l-1) dt).
struct WeightTable {
  std::vector<double> W;   // W(l dt), l = 0..nt
  std::vector<double> dW;  // dW[0] unused
  bool nonpositive = false;

  double weight(int n, int j) const { return dW[n - j]; }
};

WeightTable build_weights(const FdGrid& grid, const FracParams& p, const SeriesControl& ctl);

// Implicit L1-type scheme; the field holds t_n = n dt (n = 1..nt) and x_i = i dx including walls.
SolutionField fd_solve(const ProblemSpec& ps, const FdGrid& grid, const SeriesControl& ctl);

// sum_j w (u^{j+1} - u^j)/dt - D2 u^n at interior nodes, t-major (nt x nx). initial_row holds
// u(0, x_i) on all nx + 2 nodes.
std::vector<double> fd_apply_operator(const SolutionField& field, const std::vector<double>& initial_row,
                                      const FdGrid& grid, const FracParams& p,
                                      const SeriesControl& ctl);

}  // namespace prab
