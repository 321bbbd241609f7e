#pragma once

#include "prab/problem.hpp"

namespace prab {

// a = pi, T = 2, alpha = 0.8, gamma = 0.3, delta = 0.5.
FracParams example_params(double beta);
DomainSpec example_domain();

// tau = sin x, zero boundary data and forcing.
ProblemSpec example1(double beta);
// f = t sin x, zero initial and boundary data.
ProblemSpec example2(double beta);
// u* = (1 + t) sin x with f = sin x (W(t) + 1 + t).
ProblemSpec manufactured(const FracParams& p, const SeriesControl& ctl);
double manufactured_exact(double t, double x);

}  // namespace prab
