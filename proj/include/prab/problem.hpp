#pragma once

#include <functional>
#include <string>
#include <vector>

#include "prab/params.hpp"

namespace prab {

// Data of the first initial-boundary value problem. An empty handle means identically zero.
struct ProblemSpec {
  DomainSpec domain;
  FracParams params;
  std::function<double(double)> phi0;    // u(t, 0)
  std::function<double(double)> phi1;    // u(t, a)
  std::function<double(double)> tau;     // u(0, x)
  std::function<double(double, double)> f;  // f(t, x)

  double phi0_at(double t) const { return phi0 ? phi0(t) : 0.0; }
  double phi1_at(double t) const { return phi1 ? phi1(t) : 0.0; }
  double tau_at(double x) const { return tau ? tau(x) : 0.0; }
  double f_at(double t, double x) const { return f ? f(t, x) : 0.0; }

  // Compatibility phi0(0) == tau(0), phi1(0) == tau(a) and a spot check that t^{1-beta} f stays
  // bounded near t = 0. Throws InvalidParameters.
  void validate() const;
};

enum class Method { Greens, Oracle };
const char* method_name(Method m);

struct SolutionField {
  std::vector<double> t_nodes;
  std::vector<double> x_nodes;
  std::vector<double> values;  // t-major: values[i * x_nodes.size() + j]
  Method method = Method::Greens;
  FracParams params;
  DomainSpec domain;
  bool flagged = false;  // set by the oracle when a convolution weight is not positive
  std::string note;

  double at(std::size_t i, std::size_t j) const { return values[i * x_nodes.size() + j]; }
  double& at(std::size_t i, std::size_t j) { return values[i * x_nodes.size() + j]; }
};

// max |a - b| over the common nodes divided by max |a|; grids must match exactly.
double max_relative_difference(const SolutionField& a, const SolutionField& b);

}  // namespace prab
