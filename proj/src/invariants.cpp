#include "prab/invariants.hpp"

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <random>

#include "prab/error.hpp"
#include "prab/examples.hpp"
#include "prab/greens.hpp"
#include "prab/operators.hpp"
#include "prab/oracle.hpp"
#include "prab/solver.hpp"
#include "prab/specfun.hpp"

namespace prab {

namespace {

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

class Collector {
 public:
  Collector(const char* module, const VerifyOptions& o) : module_(module), o_(o) {}

  // Runs fn, turning library errors into a failed check that names the error.
  template <class Fn>
  void check(const std::string& name, Fn fn) {
    CheckResult r{module_, name, false, ""};
    try {
      fn(r);
    } catch (const Error& e) {
      r.passed = false;
      r.detail = e.what();
    }
    if (o_.on_result) o_.on_result(r);
    out_.push_back(std::move(r));
  }

  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  std::string module_;
  const VerifyOptions& o_;
  std::vector<CheckResult> out_;
};

double rel(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s > 0 ? std::abs(a - b) / s : 0.0;
}

const FracParams kBase = FracParams::make(0.8, 0.5, 0.3, 0.5);

}  // namespace

CrossMethod compare_with_oracle(const ProblemSpec& ps, int nt, int nx, int t_stride, int x_stride,
                                const QuadratureSpec& q, const SeriesControl& ctl) {
  const auto start = std::chrono::steady_clock::now();
  const FdGrid coarse = FdGrid::make(nt, nx, ps.domain);
  const FdGrid fine = FdGrid::make(2 * nt, 2 * nx + 1, ps.domain);
  const SolutionField fc = fd_solve(ps, coarse, ctl);
  const SolutionField ff = fd_solve(ps, fine, ctl);

  std::vector<int> ti, xi;
  for (int n = t_stride; n <= nt; n += t_stride) ti.push_back(n);
  for (int i = 0; i <= nx + 1; i += x_stride) xi.push_back(i);
  if (xi.back() != nx + 1) xi.push_back(nx + 1);
  std::vector<double> tn, xn;
  for (int n : ti) tn.push_back(fc.t_nodes[n - 1]);
  for (int i : xi) xn.push_back(fc.x_nodes[i]);
  const SolutionField g = solve_u(ps, tn, xn, q, ctl);

  double dc = 0, df = 0, scale = 0;
  for (std::size_t a = 0; a < ti.size(); ++a) {
    for (std::size_t b = 0; b < xi.size(); ++b) {
      const double ug = g.at(a, b);
      scale = std::max(scale, std::abs(ug));
      dc = std::max(dc, std::abs(ug - fc.at(ti[a] - 1, xi[b])));
      df = std::max(df, std::abs(ug - ff.at(2 * ti[a] - 1, 2 * xi[b])));
    }
  }
  CrossMethod r;
  r.rel_coarse = scale > 0 ? dc / scale : dc;
  r.rel_fine = scale > 0 ? df / scale : df;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CheckResult> specfun_checks(const VerifyOptions& o) {
  Collector c("specfun", o);
  const SeriesControl& ctl = o.series;
  const double s = o.tol_scale;

  c.check("recip_gamma recurrence on [-5,5]", [&](CheckResult& r) {
    double worst = 0;
    for (int i = 0; i <= 1000; ++i) {
      const double x = -5 + 0.01 * i + 0.003;
      if (std::abs(x - std::nearbyint(x)) < 1e-3) continue;
      worst = std::max(worst, rel(recip_gamma(x + 1), recip_gamma(x) / x));
    }
    r.passed = worst <= 1e-12 * s;
    r.detail = fmt("max rel %.3g (tol %.1g)", worst, 1e-12 * s);
  });

  c.check("Vandermonde identity for Pochhammer", [&](CheckResult& r) {
    std::mt19937_64 rng(20240517);
    std::uniform_real_distribution<double> U(-2, 2);
    double worst = 0;
    for (int draw = 0; draw < 50; ++draw) {
      const double d = U(rng), g = U(rng);
      for (int k = 0; k <= 12; ++k) {
        double lhs = 0, mag = 0;
        for (int m = 0; m <= k; ++m) {
          const double term = pochhammer(d, m) * pochhammer(g, k - m) * recip_gamma(m + 1.0) *
                              recip_gamma(k - m + 1.0);
          lhs += term;
          mag += std::abs(term);
        }
        const double rhs = pochhammer(d + g, k) * recip_gamma(k + 1.0);
        if (mag > 0) worst = std::max(worst, std::abs(lhs - rhs) / mag);
      }
    }
    r.passed = worst <= 1e-10 * s;
    r.detail = fmt("max error / term magnitude %.3g over 50 draws, k<=12", worst);
  });

  c.check("Cauchy-product regrouping of Prabhakar series", [&](CheckResult& r) {
    const double z = 0.5;
    const PrabhakarSeries e1(0.8, 0.9, 0.3, ctl), e2(0.8, 0.5, -0.15, ctl);
    const double prod = e1(z) * e2(z);
    auto coef = [&](double al, double be, double ga, int k) {
      return pochhammer(ga, k) * recip_gamma(k + 1.0) * recip_gamma(al * k + be) * std::pow(z, k);
    };
    StopRule rule(ctl.abs_tol, ctl.rel_tol);
    double sum = 0;
    int k = 0;
    for (; k <= ctl.k_max; ++k) {
      double term = 0;
      for (int m = 0; m <= k; ++m) term += coef(0.8, 0.9, 0.3, m) * coef(0.8, 0.5, -0.15, k - m);
      sum += term;
      if (rule.push(term, sum)) break;
    }
    const double tol = 10 * (ctl.abs_tol + ctl.rel_tol * std::abs(prod)) * s;
    r.passed = std::abs(sum - prod) <= tol;
    r.detail = fmt("|diff| %.3g after %d diagonals (tol %.3g)", std::abs(sum - prod), k + 1, tol);
  });

  c.check("gamma=0 Prabhakar reduction", [&](CheckResult& r) {
    bool ok = true;
    for (double al : {0.3, 0.8, 1.7})
      for (double be : {0.2, 0.9, 2.5})
        for (double z : {-3.0, -0.5, 0.0, 0.7, 7.3}) ok &= prabhakar_ml(al, be, 0.0, z, ctl) == recip_gamma(be);
    r.passed = ok;
    r.detail = ok ? "exact for all sampled (alpha, beta, z)" : "mismatch";
  });

  c.check("E^1_{1,1} = exp for |z| <= 5", [&](CheckResult& r) {
    double worst = 0;
    for (int i = 0; i <= 100; ++i) {
      const double z = -5 + 0.1 * i;
      worst = std::max(worst, rel(prabhakar_ml(1, 1, 1, z, ctl), std::exp(z)));
    }
    r.passed = worst <= 1e-10 * s;
    r.detail = fmt("max rel %.3g", worst);
  });

  c.check("Wright-type beta=0 reduction", [&](CheckResult& r) {
    double worst = rel(wright_e(1, 0, 1, 1, 1, ctl), std::numbers::e);
    for (double z : {-2.0, 0.3, 1.5})
      worst = std::max(worst, rel(wright_e(0.8, 0, 1.2, 0.7, z, ctl),
                                  prabhakar_ml(0.8, 1.2, 1, z, ctl) * recip_gamma(0.7)));
    r.passed = worst <= 1e-12 * s;
    r.detail = fmt("max rel %.3g", worst);
  });

  c.check("Wright-type limit z e(z) -> -1/(Gamma(mu-alpha) Gamma(delta+beta))", [&](CheckResult& r) {
    // mu=2, delta=1-beta: every algebraic correction vanishes; mu=1.5 needs extrapolation in 1/z
    const double b = 0.05;
    const double e1 = -20 * wright_e(1, b, 2, 1 - b, -20, ctl);
    const double lim2 = -recip_gamma(0.5) * recip_gamma(1 + b);
    const double f10 = -10 * wright_e(1, b, 1.5, 1, -10, ctl);
    const double f20 = -20 * wright_e(1, b, 1.5, 1, -20, ctl);
    const double ext = 2 * f20 - f10;
    const double err1 = std::abs(e1 + 1), err2 = std::abs(ext - lim2);
    r.passed = err1 <= 1e-6 * s && err2 <= 1e-2 * s;
    r.detail = fmt("mu=2: |z e + 1| = %.3g at z=-20; mu=1.5: extrapolated %.6f vs %.6f", err1, ext, lim2);
  });

  return c.take();
}

std::vector<CheckResult> operator_checks(const VerifyOptions& o) {
  Collector c("operators", o);
  const SeriesControl& ctl = o.series;
  const QuadratureSpec& q = o.quadrature;
  const double s = o.tol_scale;
  const FracParams p = kBase;

  const TimeFunction sin_f{[](double t) { return std::sin(t); }, [](double t) { return std::cos(t); }};
  const TimeFunction sq_f{[](double t) { return t * t; }, [](double t) { return 2 * t; }};

  c.check("linearity of integral, RL and Caputo derivatives", [&](CheckResult& r) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(-2, 2);
    const double a = U(rng), b = U(rng), t = 0.8;
    const TimeFunction comb{[&](double v) { return a * std::sin(v) + b * v * v; },
                            [&](double v) { return a * std::cos(v) + 2 * b * v; }};
    const IntegralOrder ord = derivative_order(p);
    double worst = 0;
    worst = std::max(worst, std::abs(prabhakar_integral(comb, t, ord, q, ctl) -
                                     (a * prabhakar_integral(sin_f, t, ord, q, ctl) +
                                      b * prabhakar_integral(sq_f, t, ord, q, ctl))));
    worst = std::max(worst, std::abs(prabhakar_deriv_rl(comb, t, p, q, ctl) -
                                     (a * prabhakar_deriv_rl(sin_f, t, p, q, ctl) +
                                      b * prabhakar_deriv_rl(sq_f, t, p, q, ctl))));
    worst = std::max(worst, std::abs(prabhakar_deriv_caputo(comb, t, p, q, ctl) -
                                     (a * prabhakar_deriv_caputo(sin_f, t, p, q, ctl) +
                                      b * prabhakar_deriv_caputo(sq_f, t, p, q, ctl))));
    r.passed = worst <= 1e-9 * s;
    r.detail = fmt("max |op(ag+bh) - a op g - b op h| = %.3g", worst);
  });

  c.check("gamma=0 Caputo matches classical power-function formula", [&](CheckResult& r) {
    const FracParams p0 = FracParams::make(0.8, 0.5, 0.0, 0.5);
    double worst = 0;
    for (int pw = 1; pw <= 3; ++pw) {
      const TimeFunction g{[pw](double v) { return std::pow(v, pw); },
                           [pw](double v) { return pw * std::pow(v, pw - 1); }};
      for (double t : {0.5, 1.0}) {
        const double exact = std::tgamma(pw + 1.0) * std::pow(t, pw - p0.beta) / std::tgamma(pw + 1 - p0.beta);
        worst = std::max(worst, rel(prabhakar_deriv_caputo(g, t, p0, q, ctl), exact));
      }
    }
    r.passed = worst <= 1e-6 * s;
    r.detail = fmt("max rel %.3g", worst);
  });

  c.check("Caputo/RL relation residual on {s, s^2, sin s, s+2}", [&](CheckResult& r) {
    const std::vector<TimeFunction> basket = {
        {[](double v) { return v; }, [](double) { return 1.0; }},
        sq_f,
        sin_f,
        {[](double v) { return v + 2; }, [](double) { return 1.0; }},
    };
    double worst = 0;
    for (const auto& g : basket)
      for (double t : {0.5, 1.0}) worst = std::max(worst, caputo_rl_residual(g, t, p, q, ctl));
    r.passed = worst <= 1e-6 * s;
    r.detail = fmt("max residual %.3g", worst);
  });

  c.check("RL derivative agrees with central-difference cross-check", [&](CheckResult& r) {
    double worst = 0;
    for (const auto* g : {&sin_f, &sq_f})
      worst = std::max(worst, rel(prabhakar_deriv_rl(*g, 0.7, p, q, ctl), prabhakar_deriv_rl_fd(*g, 0.7, p, q, ctl)));
    r.passed = worst <= 1e-6 * s;
    r.detail = fmt("max rel %.3g", worst);
  });

  c.check("vanishing integral: decay exponent 1 - beta", [&](CheckResult& r) {
    const TimeFunction one{[](double) { return 1.0; }, {}};
    const TimeFunction cs{[](double v) { return std::cos(v); }, {}};
    bool ok = true;
    std::string d;
    for (double beta : o.betas) {
      const FracParams pb = FracParams::make(0.8, beta, 0.3, 0.5);
      for (const auto* g : {&one, &cs}) {
        const DecayFit f = vanishing_integral_limit(*g, pb, q, ctl);
        const double slope = f.slope.value_or(NAN);
        const bool good = std::abs(slope - (1 - beta)) <= 0.05 * s &&
                          std::abs(f.values[3]) < std::abs(f.values[0]);
        ok &= good;
        d += fmt("beta=%g slope %.4f; ", beta, slope);
      }
    }
    r.passed = ok;
    r.detail = d;
  });

  return c.take();
}

std::vector<CheckResult> greens_checks(const VerifyOptions& o) {
  Collector c("greens", o);
  const SeriesControl& ctl = o.series;
  const double s = o.tol_scale;
  const DomainSpec d = example_domain();
  const double a = d.a;

  c.check("G vanishes at both walls", [&](CheckResult& r) {
    double worst = 0;
    for (double beta : o.betas) {
      const GreensKernels gk(d, example_params(beta), ctl);
      for (double tau : {0.01, 0.3, 2.0})
        for (double xi : {0.3, 1.5, 2.9})
          worst = std::max({worst, std::abs(gk.g(tau, 0.0, xi).value), std::abs(gk.g(tau, a, xi).value)});
    }
    r.passed = worst <= ctl.abs_tol * s;
    r.detail = fmt("max |G| at walls %.3g", worst);
  });

  c.check("G symmetric in (x, xi)", [&](CheckResult& r) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> U(0, 1);
    double worst = 0;
    const GreensKernels gk(d, kBase, ctl);
    for (int i = 0; i < 100; ++i) {
      const double tau = 0.02 + 1.98 * U(rng), x = a * U(rng), xi = a * U(rng);
      const double g1 = gk.g(tau, x, xi).value, g2 = gk.g(tau, xi, x).value;
      worst = std::max(worst, std::abs(g1 - g2) / std::max(1.0, std::abs(g1)));
    }
    r.passed = worst <= 1e-10 * s;
    r.detail = fmt("max diff %.3g over 100 samples", worst);
  });

  c.check("G depends on t - eta only", [&](CheckResult& r) {
    bool ok = true;
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> U(0, 1);
    for (int i = 0; i < 20; ++i) {
      const double t = 0.1 + 1.9 * U(rng), eta = t * U(rng) * 0.9, x = a * U(rng), xi = a * U(rng);
      ok &= green_g(t, x, eta, xi, d, kBase, ctl).value == green_g(t - eta, x, 0, xi, d, kBase, ctl).value;
    }
    r.passed = ok;
    r.detail = ok ? "bitwise equal on 20 samples" : "differs";
  });

  c.check("G-tilde closed form vs quadrature on 5x5x5 samples", [&](CheckResult& r) {
    const GreensKernels gk(d, kBase, ctl);
    double worst = 0, gmax = 0;
    std::vector<std::pair<double, double>> vals;
    for (double t : {0.1, 0.5, 1.0, 1.5, 2.0})
      for (double x : {0.3, 0.9, 1.5, 2.1, 2.7})
        for (double xi : {0.2, 0.8, 1.6, 2.2, 2.9}) {
          const double cf = gk.g_tilde(t, x, xi).value;
          const double qd = gk.g_tilde_quadrature(t, x, xi, o.quadrature).value;
          vals.emplace_back(cf, qd);
          gmax = std::max(gmax, std::abs(cf));
        }
    // relative to each value, floored at 1e-4 of the largest sample
    for (auto [cf, qd] : vals) worst = std::max(worst, std::abs(cf - qd) / std::max(std::abs(cf), 1e-4 * gmax));
    r.passed = worst <= 1e-6 * s;
    r.detail = fmt("max rel %.3g", worst);
  });

  c.check("t omega equals the E12 instantiation", [&](CheckResult& r) {
    const double t = 0.6, x = 0.4;
    const double lhs = t * omega_kernel(t, x, kBase, ctl);
    const double rhs = bivariate_e12(e12_omega(kBase), -x * std::pow(t, -kBase.beta1),
                                     kBase.delta * std::pow(t, kBase.alpha), ctl);
    r.passed = rel(lhs, rhs) <= 1e-10 * s;
    r.detail = fmt("rel %.3g", rel(lhs, rhs));
  });

  c.check("image sums unchanged when n_images doubles", [&](CheckResult& r) {
    SeriesControl wide = ctl;
    wide.n_images = 2 * ctl.n_images;
    double worst = 0;
    for (double beta : o.betas) {
      const GreensKernels g1(d, example_params(beta), ctl), g2(d, example_params(beta), wide);
      for (double tau : {0.05, 1.0, 2.0})
        for (double x : {0.4, 1.7, 3.0}) {
          worst = std::max(worst, std::abs(g1.g(tau, x, 1.1).value - g2.g(tau, x, 1.1).value));
          worst = std::max(worst, std::abs(g1.g_tilde(tau, x, 2.3).value - g2.g_tilde(tau, x, 2.3).value));
          worst = std::max(worst, std::abs(g1.gxi(tau, x, Wall::Left).value - g2.gxi(tau, x, Wall::Left).value));
          worst = std::max(worst, std::abs(g1.gxi(tau, x, Wall::Right).value - g2.gxi(tau, x, Wall::Right).value));
        }
    }
    r.passed = worst <= ctl.abs_tol * s;
    r.detail = fmt("max change %.3g", worst);
  });

  c.check("v positive at the sampled point", [&](CheckResult& r) {
    const double v = free_space_v(1.0, 0.5, 0.0, 0.0, kBase, ctl);
    r.passed = v > 0;
    r.detail = fmt("v(1, 0.5) = %.6g", v);
  });

  return c.take();
}

std::vector<CheckResult> solver_checks(const VerifyOptions& o) {
  Collector c("solver", o);
  const SeriesControl& ctl = o.series;
  const QuadratureSpec& q = o.quadrature;
  const double s = o.tol_scale;
  const double pi = std::numbers::pi;

  c.check("superposition of data", [&](CheckResult& r) {
    ProblemSpec A = example1(0.5), B = example2(0.5), AB = example1(0.5);
    B.phi0 = [](double t) { return t; };
    AB.f = B.f;
    AB.phi0 = B.phi0;
    GreensSolver sa(A, q, ctl), sb(B, q, ctl), sab(AB, q, ctl);
    double worst = 0;
    for (double t : {0.5, 2.0})
      for (double x : {0.7, 2.0}) worst = std::max(worst, std::abs(sa.u(t, x) + sb.u(t, x) - sab.u(t, x)));
    r.passed = worst <= 1e-9 * s;
    r.detail = fmt("max |u_A + u_B - u_(A+B)| = %.3g", worst);
  });

  c.check("boundary attainment as x -> 0", [&](CheckResult& r) {
    ProblemSpec ps;
    ps.domain = example_domain();
    ps.params = kBase;
    ps.phi0 = [](double) { return 1.0; };
    const double e2 = std::abs(solve_y(ps, 1.0, 1e-2 * pi, q, ctl) - 1);
    const double e3 = std::abs(solve_y(ps, 1.0, 1e-3 * pi, q, ctl) - 1);
    r.passed = e3 < e2 && e3 <= 2e-2 * s;
    r.detail = fmt("|y - 1| = %.3g at x=1e-2 a, %.3g at x=1e-3 a", e2, e3);
  });

  c.check("initial attainment as t -> 0 (errors decrease)", [&](CheckResult& r) {
    bool ok = true;
    std::string d;
    for (double beta : o.betas) {
      const ProblemSpec ps = example1(beta);
      GreensSolver sv(ps, q, ctl);
      double e[2] = {0, 0};
      const double ts[2] = {1e-2, 1e-3};
      for (int k = 0; k < 2; ++k)
        for (int j = 1; j < 20; ++j) {
          const double x = pi * j / 20;
          e[k] = std::max(e[k], std::abs(sv.u(ts[k], x) - std::sin(x)));
        }
      ok &= e[1] < e[0];
      d += fmt("beta=%g: %.3g -> %.3g; ", beta, e[0], e[1]);
    }
    r.passed = ok;
    r.detail = d;
  });

  c.check("beta ordering at (2, pi/2)", [&](CheckResult& r) {
    std::vector<double> u1, u2;
    const std::vector<double> betas{0.1, 0.5, 0.9};
    for (double beta : betas) {
      GreensSolver s1(example1(beta), q, ctl), s2(example2(beta), q, ctl);
      u1.push_back(s1.u(2, pi / 2));
      u2.push_back(s2.u(2, pi / 2));
    }
    const bool dec = u1[0] > u1[1] && u1[1] > u1[2];
    const bool inc = u2[0] < u2[1] && u2[1] < u2[2];
    r.passed = dec && inc;
    r.detail = fmt("example 1: %.6f %.6f %.6f; example 2: %.6f %.6f %.6f", u1[0], u1[1], u1[2], u2[0], u2[1], u2[2]);
  });

  c.check("manufactured solution on an 11x11 grid", [&](CheckResult& r) {
    const ProblemSpec ps = manufactured(kBase, ctl);
    std::vector<double> tn, xn;
    for (int i = 1; i <= 11; ++i) tn.push_back(ps.domain.T * i / 11);
    for (int j = 0; j <= 10; ++j) xn.push_back(ps.domain.a * j / 10);
    const SolutionField f = solve_u(ps, tn, xn, q, ctl);
    double e = 0;
    for (std::size_t i = 0; i < tn.size(); ++i)
      for (std::size_t j = 0; j < xn.size(); ++j) e = std::max(e, std::abs(f.at(i, j) - manufactured_exact(tn[i], xn[j])));
    e /= 3.0;
    r.passed = e <= 1e-2 * s;
    r.detail = fmt("max rel error %.3g", e);
  });

  c.check("zero data gives zero field", [&](CheckResult& r) {
    ProblemSpec ps;
    ps.domain = example_domain();
    ps.params = kBase;
    const SolutionField f = solve_u(ps, {0.5, 1.0}, {0.0, 1.0, pi}, q, ctl);
    bool ok = true;
    for (double v : f.values) ok &= v == 0.0;
    r.passed = ok;
    r.detail = ok ? "all zero" : "nonzero value";
  });

  c.check("compatibility conditions enforced", [&](CheckResult& r) {
    ProblemSpec ps = example1(0.5);
    ps.phi0 = [](double) { return 1.0; };
    try {
      ps.validate();
      r.passed = false;
      r.detail = "incompatible data accepted";
    } catch (const Error& e) {
      r.passed = e.kind() == ErrorKind::InvalidParameters;
      r.detail = "rejected";
    }
  });

  return c.take();
}

std::vector<CheckResult> oracle_checks(const VerifyOptions& o) {
  Collector c("oracle", o);
  const SeriesControl& ctl = o.series;
  const double s = o.tol_scale;
  const DomainSpec d = example_domain();

  c.check("weights telescope to W(t_n)", [&](CheckResult& r) {
    const FdGrid g = FdGrid::make(64, 8, d);
    const WeightTable w = build_weights(g, kBase, ctl);
    double worst = 0;
    for (int n = 1; n <= g.nt; ++n) {
      double sum = 0;
      for (int j = 0; j < n; ++j) sum += w.weight(n, j);
      worst = std::max(worst, rel(sum, kernel_antiderivative_W(n * g.dt(), kBase, ctl)));
    }
    r.passed = worst <= 1e-12 * s;
    r.detail = fmt("max rel %.3g", worst);
  });

  c.check("gamma=0 weights equal classical L1 weights", [&](CheckResult& r) {
    const FracParams p0 = FracParams::make(0.8, 0.5, 0.0, 0.5);
    const FdGrid g = FdGrid::make(64, 8, d);
    const WeightTable w = build_weights(g, p0, ctl);
    double worst = 0;
    const double dt = g.dt(), e = 1 - p0.beta;
    for (int l = 1; l <= g.nt; ++l) {
      const double l1 = std::pow(dt, e) * (std::pow(double(l), e) - std::pow(l - 1.0, e)) / std::tgamma(2 - p0.beta);
      worst = std::max(worst, rel(w.dW[l], l1));
    }
    r.passed = worst <= 1e-12 * s;
    r.detail = fmt("max rel %.3g", worst);
  });

  c.check("FD converges on the manufactured solution", [&](CheckResult& r) {
    const ProblemSpec ps = manufactured(kBase, ctl);
    double err[2];
    const int sizes[2][2] = {{64, 32}, {128, 65}};
    for (int k = 0; k < 2; ++k) {
      const SolutionField f = fd_solve(ps, FdGrid::make(sizes[k][0], sizes[k][1], d), ctl);
      double e = 0;
      for (std::size_t i = 0; i < f.t_nodes.size(); ++i)
        for (std::size_t j = 0; j < f.x_nodes.size(); ++j)
          e = std::max(e, std::abs(f.at(i, j) - manufactured_exact(f.t_nodes[i], f.x_nodes[j])));
      err[k] = e / 3.0;  // max |u*| = 3
    }
    const double ratio = err[0] / err[1];
    r.passed = err[0] <= 2e-2 * s && ratio >= 1.5;
    r.detail = fmt("rel err %.3g (64x32), %.3g (128x65), ratio %.2f", err[0], err[1], ratio);
  });

  for (int ex = 1; ex <= 2; ++ex) {
    for (double beta : o.betas) {
      c.check(fmt("example %d beta=%g: oracle vs Green's field", ex, beta), [&](CheckResult& r) {
        const ProblemSpec ps = ex == 1 ? example1(beta) : example2(beta);
        const CrossMethod m = compare_with_oracle(ps, 64, 32, 8, 4, o.quadrature, ctl);
        r.passed = m.rel_coarse <= 5e-2 * s && m.rel_fine < m.rel_coarse;
        r.detail = fmt("rel diff %.3g (64x32) -> %.3g (128x65), %.1f s", m.rel_coarse, m.rel_fine, m.seconds);
      });
    }
  }

  return c.take();
}

std::vector<CheckResult> run_invariants(const VerifyOptions& o) {
  std::vector<CheckResult> all;
  for (auto fn : {specfun_checks, operator_checks, greens_checks, solver_checks, oracle_checks}) {
    auto part = fn(o);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

}  // namespace prab
