#pragma once

#include <vector>

#include "prab/params.hpp"

namespace prab {

// 1/Gamma(x); exactly 0 at the poles x = 0, -1, -2, ...
double recip_gamma(double x);

// Rising factorial c (c+1) ... (c+k-1).
double pochhammer(double c, int k);

// Counts consecutive negligible terms; a series is accepted after three in a row.
class StopRule {
 public:
  StopRule(double abs_tol, double rel_tol) : abs_tol_(abs_tol), rel_tol_(rel_tol) {}
  bool push(double term, double partial);

 private:
  double abs_tol_;
  double rel_tol_;
  int run_ = 0;
};

// Coefficients of E^gamma_{alpha,beta}(z) = sum (gamma)_k z^k / (k! Gamma(alpha k + beta)),
// precomputed once so repeated evaluations only pay for the polynomial.
class PrabhakarSeries {
 public:
  PrabhakarSeries(double alpha, double beta, double gamma, const SeriesControl& ctl);
  double operator()(double z) const;
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

 private:
  double alpha_, beta_, gamma_;
  SeriesControl ctl_;
  std::vector<double> coef_;
  int first_counted_ = 0;  // terms before this index sit in the Gamma pole zone
};

double prabhakar_ml(double alpha, double beta, double gamma, double z, const SeriesControl& ctl);

// e^{mu,delta}_{alpha,beta}(z) = sum z^n / (Gamma(alpha n + mu) Gamma(delta - beta n)).
double wright_e(double alpha, double beta, double mu, double delta, double z,
                const SeriesControl& ctl);

// Bivariate series
//   sum_{n,m} Gamma(a1 n + b1 m + d1) x^n y^m
//     / (Gamma(a2 n + b2 m + d2) Gamma(a3 n + d3) Gamma(a4 n + d4) Gamma(b3 m + d5)).
struct E12Params {
  double a1 = 0, b1 = 1, d1 = 0;
  double a2 = 0, b2 = 1, d2 = 1;
  double a3 = 0, d3 = 0;
  double a4 = 1, d4 = 1;
  double b3 = 1, d5 = 1;

  double delta1() const { return a2 + a3 + a4 - a1; }
  double delta2() const { return b2 + b3 - b1; }
  bool foldable() const { return a1 == a3 && d1 == d3 && b1 == 1.0; }
};

double bivariate_e12(const E12Params& p, double x, double y, const SeriesControl& ctl);

// The three instantiations used by the kernels: omega, the free-space kernel v (and G),
// and the initial-data kernel G-tilde.
E12Params e12_omega(const FracParams& p);
E12Params e12_green(const FracParams& p);
E12Params e12_green_tilde(const FracParams& p);

// W(t) = t^{1-beta} E^{-gamma}_{alpha,2-beta}(delta t^alpha).
double kernel_antiderivative_W(double t, const FracParams& p, const SeriesControl& ctl);

}  // namespace prab
