#include "prab/examples.hpp"

#include <cmath>
#include <memory>
#include <numbers>

#include "prab/specfun.hpp"

namespace prab {

FracParams example_params(double beta) { return FracParams::make(0.8, beta, 0.3, 0.5); }

DomainSpec example_domain() { return DomainSpec{std::numbers::pi, 2.0}; }

ProblemSpec example1(double beta) {
  ProblemSpec ps;
  ps.domain = example_domain();
  ps.params = example_params(beta);
  ps.tau = [](double x) { return std::sin(x); };
  return ps;
}

ProblemSpec example2(double beta) {
  ProblemSpec ps;
  ps.domain = example_domain();
  ps.params = example_params(beta);
  ps.f = [](double t, double x) { return t * std::sin(x); };
  return ps;
}

ProblemSpec manufactured(const FracParams& p, const SeriesControl& ctl) {
  ProblemSpec ps;
  ps.domain = example_domain();
  ps.params = p;
  ps.tau = [](double x) { return std::sin(x); };
  // The solver sweeps all xi at one eta, so caching the last time value saves the W series.
  struct Cache {
    PrabhakarSeries E;
    double t = -1.0, h = 0.0;
  };
  auto cache = std::make_shared<Cache>(Cache{PrabhakarSeries(p.alpha, 2 - p.beta, -p.gamma, ctl)});
  ps.f = [cache, p](double t, double x) {
    if (t != cache->t) {
      const double W = t > 0 ? std::pow(t, 1 - p.beta) * cache->E(p.delta * std::pow(t, p.alpha)) : 0.0;
      cache->t = t;
      cache->h = W + 1 + t;
    }
    return std::sin(x) * cache->h;
  };
  return ps;
}

double manufactured_exact(double t, double x) { return (1 + t) * std::sin(x); }

}  // namespace prab
