#pragma once

#include <vector>

#include "prab/params.hpp"

namespace prab {

struct Rule {
  std::vector<double> x;
  std::vector<double> w;
};

// Gauss-Legendre on [-1, 1]; cached per order, safe to call concurrently.
const Rule& gauss_legendre(int n);

// Gauss-Jacobi on [-1, 1] for the weight (1-x)^a (1+x)^b, a, b > -1 (Golub-Welsch).
Rule gauss_jacobi(int n, double a, double b);

// Nodes on [lo, hi] together with their distances to both ends, computed without
// cancellation so integrands singular at an endpoint can use the gap directly.
struct GradedRule {
  std::vector<double> s;
  std::vector<double> w;
  std::vector<double> to_lo;
  std::vector<double> to_hi;

  std::size_t size() const { return s.size(); }
};

// Graded toward both ends. Each half is mapped by s = end -/+ L u^q with q from the endpoint
// power p (integrand ~ |s - end|^p) and uniform Gauss panels in u, which makes the leading
// singular term polynomial in u.
GradedRule two_sided_rule(double lo, double hi, double power_lo, double power_hi,
                          const QuadratureSpec& q);

// Graded toward hi only.
GradedRule graded_rule_hi(double lo, double hi, double power_hi, const QuadratureSpec& q);

// Composite Gauss-Legendre on the segments between sorted breakpoints, panels no longer than
// max_len, appended to (x, w).
void append_composite(const std::vector<double>& breaks, double max_len, int nodes,
                      std::vector<double>& x, std::vector<double>& w);

}  // namespace prab
