#include "prab/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "prab/error.hpp"

namespace prab {

namespace {

bool is_pole(double x) { return x <= 0 && x == std::nearbyint(x); }

// sin(pi x) with the argument reduced exactly, so zeros at integers are exact.
double sinpi(double x) {
  const double n = std::nearbyint(x);
  const double r = x - n;
  const double s = std::sin(std::numbers::pi * r);
  return std::fmod(n, 2.0) == 0 ? s : -s;
}

// log|Gamma(x)| and the sign of Gamma(x) for non-pole x.
double log_abs_gamma(double x, int* sign) {
  if (x > 0) {
    *sign = 1;
  } else {
    const double k = std::floor(x);
    *sign = std::fmod(-k, 2.0) == 0 ? 1 : -1;
  }
  return std::lgamma(x);
}

}  // namespace

double recip_gamma(double x) {
  if (std::isnan(x)) return x;
  if (is_pole(x)) return 0.0;
  if (x >= 0.5) {
    if (x > 171.6) return 0.0;
    return 1.0 / std::tgamma(x);
  }
  // reflection: 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi
  return std::tgamma(1.0 - x) * sinpi(x) / std::numbers::pi;
}

double pochhammer(double c, int k) {
  if (k < 0) throw Error(ErrorKind::DomainError, "pochhammer needs k >= 0");
  double p = 1.0;
  for (int i = 0; i < k; ++i) p *= c + i;
  return p;
}

bool StopRule::push(double term, double partial) {
  if (std::abs(term) <= abs_tol_ + rel_tol_ * std::abs(partial))
    ++run_;
  else
    run_ = 0;
  return run_ >= 3;
}

PrabhakarSeries::PrabhakarSeries(double alpha, double beta, double gamma, const SeriesControl& ctl)
    : alpha_(alpha), beta_(beta), gamma_(gamma), ctl_(ctl) {
  if (!(alpha > 0)) throw Error(ErrorKind::DomainError, "Prabhakar function needs alpha > 0");
  coef_.resize(ctl.k_max + 1);
  double ratio = 1.0;  // (gamma)_k / k!
  for (int k = 0; k <= ctl.k_max; ++k) {
    if (k > 0) ratio *= (gamma + k - 1) / k;
    coef_[k] = ratio * recip_gamma(alpha * k + beta);
  }
  while (first_counted_ <= ctl.k_max && alpha * first_counted_ + beta <= 0) ++first_counted_;
}

double PrabhakarSeries::operator()(double z) const {
  StopRule rule(ctl_.abs_tol, ctl_.rel_tol);
  double sum = 0.0;
  double zk = 1.0;
  for (int k = 0; k <= ctl_.k_max; ++k) {
    const double term = coef_[k] * zk;
    sum += term;
    if (k >= first_counted_ && rule.push(term, sum)) return sum;
    zk *= z;
  }
  throw Error(ErrorKind::NonConvergence,
              "Prabhakar series E^" + std::to_string(gamma_) + "_{" + std::to_string(alpha_) +
                  "," + std::to_string(beta_) + "}(" + std::to_string(z) + ") needs more than k_max terms");
}

double prabhakar_ml(double alpha, double beta, double gamma, double z, const SeriesControl& ctl) {
  return PrabhakarSeries(alpha, beta, gamma, ctl)(z);
}

double wright_e(double alpha, double beta, double mu, double delta, double z,
                const SeriesControl& ctl) {
  if (!(alpha > 0)) throw Error(ErrorKind::DomainError, "Wright-type function needs alpha > 0");
  StopRule rule(ctl.abs_tol, ctl.rel_tol);
  double sum = 0.0;
  double zn = 1.0;
  for (int n = 0; n <= ctl.k_max; ++n) {
    const double term = zn * recip_gamma(alpha * n + mu) * recip_gamma(delta - beta * n);
    sum += term;
    if (alpha * n + mu > 0 && rule.push(term, sum)) return sum;
    zn *= z;
  }
  throw Error(ErrorKind::NonConvergence,
              "Wright-type series at z=" + std::to_string(z) + " needs more than k_max terms");
}

namespace {

double e12_folded(const E12Params& p, double x, double y, const SeriesControl& ctl) {
  StopRule outer(ctl.abs_tol, ctl.rel_tol);
  double sum = 0.0;
  double xn = 1.0;
  for (int n = 0; n <= ctl.k_max; ++n) {
    const double base = p.d3 + p.a3 * n;
    const double rn = recip_gamma(p.a4 * n + p.d4);
    StopRule inner(ctl.abs_tol, ctl.rel_tol);
    double row = 0.0;
    double poch = 1.0;
    double ym = 1.0;
    bool done = false;
    for (int m = 0; m <= ctl.i_max; ++m) {
      if (m > 0) {
        poch *= base + m - 1;
        ym *= y;
      }
      const double arg = p.a2 * n + p.b2 * m + p.d2;
      const double term = poch * ym * recip_gamma(arg) * recip_gamma(p.b3 * m + p.d5);
      row += term;
      if (arg > 0 && p.b3 * m + p.d5 > 0 && inner.push(term, row)) {
        done = true;
        break;
      }
    }
    if (!done)
      throw Error(ErrorKind::NonConvergence,
                  "E12 inner series at y=" + std::to_string(y) + " needs more than i_max terms");
    const double term = xn * rn * row;
    sum += term;
    if (p.a4 * n + p.d4 > 0 && outer.push(term, sum)) return sum;
    xn *= x;
  }
  throw Error(ErrorKind::NonConvergence,
              "E12 outer series at x=" + std::to_string(x) + " needs more than k_max terms");
}

// General double sum, products formed in log space so large numerator gammas do not overflow.
double e12_general(const E12Params& p, double x, double y, const SeriesControl& ctl) {
  const double lx = std::log(std::abs(x));
  const double ly = std::log(std::abs(y));
  StopRule outer(ctl.abs_tol, ctl.rel_tol);
  double sum = 0.0;
  for (int n = 0; n <= ctl.k_max; ++n) {
    StopRule inner(ctl.abs_tol, ctl.rel_tol);
    double row = 0.0;
    bool done = false;
    for (int m = 0; m <= ctl.i_max; ++m) {
      double args[4] = {p.a2 * n + p.b2 * m + p.d2, p.a3 * n + p.d3, p.a4 * n + p.d4, p.b3 * m + p.d5};
      const double num = p.a1 * n + p.b1 * m + p.d1;
      double term = 0.0;
      bool zero = false;
      bool num_pole = is_pole(num);
      if (num_pole) {
        int cancel = -1;
        for (int i = 0; i < 4; ++i)
          if (args[i] == num) cancel = i;
        if (cancel < 0)
          throw Error(ErrorKind::UnfoldablePole,
                      "numerator Gamma pole at n=" + std::to_string(n) + ", m=" + std::to_string(m));
        args[cancel] = 1.0;  // Gamma(num)/Gamma(num) -> 1
      }
      for (double a : args)
        if (is_pole(a)) zero = true;
      if ((n > 0 && x == 0) || (m > 0 && y == 0)) zero = true;
      if (!zero) {
        int sign = 1, s = 1;
        double lg = 0.0;
        if (!num_pole) {
          lg += log_abs_gamma(num, &s);
          sign *= s;
        }
        for (double a : args) {
          lg -= log_abs_gamma(a, &s);
          sign *= s;
        }
        if (n > 0) lg += n * lx;
        if (m > 0) lg += m * ly;
        if (x < 0 && n % 2) sign = -sign;
        if (y < 0 && m % 2) sign = -sign;
        term = sign * std::exp(lg);
      }
      row += term;
      if (args[0] > 0 && args[3] > 0 && inner.push(term, row)) {
        done = true;
        break;
      }
    }
    if (!done)
      throw Error(ErrorKind::NonConvergence,
                  "E12 inner series at y=" + std::to_string(y) + " needs more than i_max terms");
    sum += row;
    if (p.a4 * n + p.d4 > 0 && outer.push(row, sum)) return sum;
  }
  throw Error(ErrorKind::NonConvergence,
              "E12 outer series at x=" + std::to_string(x) + " needs more than k_max terms");
}

}  // namespace

double bivariate_e12(const E12Params& p, double x, double y, const SeriesControl& ctl) {
  if (!(p.delta1() > 0) || !(p.delta2() > 0))
    throw Error(ErrorKind::DivergentParameters,
                "E12 needs Delta1 > 0 and Delta2 > 0 (got " + std::to_string(p.delta1()) + ", " +
                    std::to_string(p.delta2()) + ")");
  if (p.foldable()) return e12_folded(p, x, y, ctl);
  return e12_general(p, x, y, ctl);
}

E12Params e12_omega(const FracParams& p) {
  E12Params e;
  e.a1 = -p.gamma1; e.b1 = 1; e.d1 = 0;
  e.a2 = -p.beta1; e.b2 = p.alpha; e.d2 = 0;
  e.a3 = -p.gamma1; e.d3 = 0;
  e.a4 = 1; e.d4 = 1;
  e.b3 = 1; e.d5 = 1;
  return e;
}

E12Params e12_green(const FracParams& p) {
  E12Params e;
  e.a1 = -p.gamma1; e.b1 = 1; e.d1 = p.gamma1;
  e.a2 = -p.beta1; e.b2 = p.alpha; e.d2 = p.beta1;
  e.a3 = -p.gamma1; e.d3 = p.gamma1;
  e.a4 = 1; e.d4 = 1;
  e.b3 = 1; e.d5 = 1;
  return e;
}

E12Params e12_green_tilde(const FracParams& p) {
  E12Params e;
  e.a1 = -p.gamma1; e.b1 = 1; e.d1 = -p.gamma1;
  e.a2 = -p.beta1; e.b2 = p.alpha; e.d2 = 1 - p.beta1;
  e.a3 = -p.gamma1; e.d3 = -p.gamma1;
  e.a4 = 1; e.d4 = 1;
  e.b3 = 1; e.d5 = 1;
  return e;
}

double kernel_antiderivative_W(double t, const FracParams& p, const SeriesControl& ctl) {
  if (t < 0) throw Error(ErrorKind::DomainError, "W needs t >= 0");
  if (t == 0) return 0.0;
  return std::pow(t, 1 - p.beta) *
         prabhakar_ml(p.alpha, 2 - p.beta, -p.gamma, p.delta * std::pow(t, p.alpha), ctl);
}

}  // namespace prab
