#include "prab/params.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "prab/error.hpp"

namespace prab {

FracParams FracParams::make(double alpha, double beta, double gamma, double delta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(gamma) ||
      !std::isfinite(delta))
    throw Error(ErrorKind::InvalidParameters, "fractional parameters must be finite");
  if (!(alpha > 0))
    throw Error(ErrorKind::InvalidParameters, "alpha must be positive, got " + std::to_string(alpha));
  if (beta == 1.0)
    throw Error(ErrorKind::InvalidParameters, "beta = 1 is not supported (need 0 < beta < 1)");
  if (!(beta > 0 && beta < 1))
    throw Error(ErrorKind::InvalidParameters, "beta must lie in (0, 1), got " + std::to_string(beta));
  FracParams p;
  p.alpha = alpha;
  p.beta = beta;
  p.gamma = gamma;
  p.delta = delta;
  p.beta1 = beta / 2;
  p.gamma1 = gamma / 2;
  return p;
}

void SeriesControl::validate() const {
  if (k_max < 1 || i_max < 1 || n_images < 1)
    throw Error(ErrorKind::InvalidParameters, "series orders must be >= 1");
  if (k_max > 170)
    throw Error(ErrorKind::InvalidParameters, "k_max above 170 overflows the factorial table");
  if (!(abs_tol > 0) || !(rel_tol > 0) || !(noise_floor > 0))
    throw Error(ErrorKind::InvalidParameters, "series tolerances must be positive");
}

void QuadratureSpec::validate() const {
  if (n_panels < 1 || nodes_per_panel < 1)
    throw Error(ErrorKind::InvalidParameters, "quadrature panel counts must be >= 1");
  if (grading_exponent > 0 && grading_exponent < 1)
    throw Error(ErrorKind::InvalidParameters, "grading exponent must be >= 1");
}

double QuadratureSpec::grading_for(double endpoint_power) const {
  if (grading_exponent > 0) return grading_exponent;
  // endpoint_power is the exponent p of (t-s)^p; p + 1 plays the role of beta'.
  return std::max(2.0, 2.0 / (endpoint_power + 1.0));
}

DomainSpec DomainSpec::make(double a, double T) {
  if (!(a > 0) || !std::isfinite(a) || !(T > 0) || !std::isfinite(T))
    throw Error(ErrorKind::InvalidParameters, "domain needs finite a > 0 and T > 0");
  return DomainSpec{a, T};
}

}  // namespace prab
