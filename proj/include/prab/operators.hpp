#pragma once

#include <array>
#include <functional>
#include <optional>

#include "prab/params.hpp"

namespace prab {

struct TimeFunction {
  std::function<double(double)> eval;
  std::function<double(double)> eval_deriv;  // optional g'
};

// Order (alpha, beta', gamma', delta) of the kernel s^{beta'-1} E^{gamma'}_{alpha,beta'}(delta s^alpha).
struct IntegralOrder {
  double alpha;
  double beta;
  double gamma;
  double delta;
};

// Order of the integral inside both derivatives: (alpha, 1-beta, -gamma, delta).
IntegralOrder derivative_order(const FracParams& p);

double prabhakar_integral(const TimeFunction& g, double t, const IntegralOrder& order,
                          const QuadratureSpec& q, const SeriesControl& ctl);

// d/dt of the Prabhakar integral, from the termwise-differentiated kernel.
double prabhakar_deriv_rl(const TimeFunction& g, double t, const FracParams& p,
                          const QuadratureSpec& q, const SeriesControl& ctl);

// Central difference of the Prabhakar integral with step 1e-4 t (cross-check only).
double prabhakar_deriv_rl_fd(const TimeFunction& g, double t, const FracParams& p,
                             const QuadratureSpec& q, const SeriesControl& ctl);

// Prabhakar integral of g'; needs g.eval_deriv.
double prabhakar_deriv_caputo(const TimeFunction& g, double t, const FracParams& p,
                              const QuadratureSpec& q, const SeriesControl& ctl);

// Caputo-type derivative through the RL route, rl(g - g(0)); no g' needed.
double prabhakar_deriv_caputo_via_rl(const TimeFunction& g, double t, const FracParams& p,
                                     const QuadratureSpec& q, const SeriesControl& ctl);

// |caputo(g)(t) - rl(g - g(0))(t)|.
double caputo_rl_residual(const TimeFunction& g, double t, const FracParams& p,
                          const QuadratureSpec& q, const SeriesControl& ctl);

struct DecayFit {
  std::array<double, 4> t{};
  std::array<double, 4> values{};
  std::optional<double> slope;  // empty when every value is zero
};

// Integral of order (alpha, 1-beta, -gamma, delta) at t = 1e-1 .. 1e-4 and its log-log slope.
DecayFit vanishing_integral_limit(const TimeFunction& g, const FracParams& p,
                                  const QuadratureSpec& q, const SeriesControl& ctl);

}  // namespace prab
