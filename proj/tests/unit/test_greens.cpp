#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "prab/error.hpp"
#include "prab/examples.hpp"
#include "prab/greens.hpp"
#include "prab/quadrature.hpp"
#include "prab/specfun.hpp"

using namespace prab;

namespace {

const SeriesControl ctl;
const QuadratureSpec q;
const FracParams base = FracParams::make(0.8, 0.5, 0.3, 0.5);
const DomainSpec dom = example_domain();
constexpr double pi = std::numbers::pi;

// tests/oracles/reference_values.py: left boundary kernel, t - eta = 0.7, x = pi/2, 30 images
constexpr double kGxiLeft = 0.14664679687628834681;

}  // namespace

TEST_CASE("omega against its E12 form and its decay") {
  for (auto [t, x] : {std::pair{0.6, 0.4}, {0.05, 0.01}, {2.0, 3.0}}) {
    const double e12 = bivariate_e12(e12_omega(base), -x * std::pow(t, -base.beta1),
                                     base.delta * std::pow(t, base.alpha), ctl);
    CHECK(t * omega_kernel(t, x, base, ctl) == doctest::Approx(e12).epsilon(1e-10));
  }
  CHECK(std::abs(omega_kernel(1.0, 20.0, base, ctl)) < 1e-10);
  CHECK_THROWS_AS(omega_kernel(1.0, -0.1, base, ctl), Error);
}

TEST_CASE("boundary kernel") {
  const KernelValue kv = boundary_kernel_gxi(1.0, pi / 2, 0.3, Wall::Left, dom, base, ctl);
  // images past the series cutoff are dropped, which costs up to about noise_floor each
  CHECK(std::abs(kv.value - kGxiLeft) <= 5 * ctl.noise_floor);
  CHECK(kv.truncation_estimate <= ctl.abs_tol);

  // far walls: only the direct term survives
  const DomainSpec wide = DomainSpec::make(1000.0, 2.0);
  CHECK(boundary_kernel_gxi(1.0, 0.3, 0.0, Wall::Left, wide, base, ctl).value ==
        doctest::Approx(omega_kernel(1.0, 0.3, base, ctl)).epsilon(1e-12));
  CHECK(boundary_kernel_gxi(1.0, 999.7, 0.0, Wall::Right, wide, base, ctl).value ==
        doctest::Approx(-omega_kernel(1.0, 0.3, base, ctl)).epsilon(1e-12));

  CHECK_THROWS_AS(boundary_kernel_gxi(1.0, 1.0, 1.0, Wall::Left, dom, base, ctl), Error);
  CHECK_THROWS_AS(boundary_kernel_gxi(1.0, 0.0, 0.2, Wall::Left, dom, base, ctl), Error);
}

TEST_CASE("Green's function: walls, symmetry, translation") {
  for (double xi : {0.2, 1.0, 3.0}) {
    CHECK(green_g(1.0, 0.0, 0.2, xi, dom, base, ctl).value == 0.0);
    CHECK(std::abs(green_g(1.0, pi, 0.2, xi, dom, base, ctl).value) <= ctl.abs_tol);
  }
  const double g12 = green_g(1.0, 1.0, 0.2, 2.0, dom, base, ctl).value;
  const double g21 = green_g(1.0, 2.0, 0.2, 1.0, dom, base, ctl).value;
  CHECK(std::abs(g12 - g21) <= 1e-10);
  CHECK(g12 == green_g(0.8, 1.0, 0.0, 2.0, dom, base, ctl).value);
  CHECK_THROWS_AS(green_g(1.0, 1.0, 1.2, 2.0, dom, base, ctl), Error);
  CHECK_THROWS_AS(green_g(1.0, 4.0, 0.2, 2.0, dom, base, ctl), Error);
}

TEST_CASE("free-space kernel") {
  CHECK(free_space_v(1.0, 0.5, 0.0, 0.0, base, ctl) > 0);
  CHECK(free_space_v(1.0, 0.5, 0.0, 0.0, base, ctl) == free_space_v(1.0, 0.0, 0.0, 0.5, base, ctl));
  // with walls far away G reduces to the direct term
  const DomainSpec wide = DomainSpec::make(1000.0, 2.0);
  CHECK(green_g(1.0, 400.0, 0.0, 400.5, wide, base, ctl).value ==
        doctest::Approx(free_space_v(1.0, 400.0, 0.0, 400.5, base, ctl)).epsilon(1e-12));
}

TEST_CASE("initial-data kernel: both paths agree") {
  const KernelValue cf = green_g_tilde(0.5, 1.2, 1.9, dom, base, q, ctl);
  const KernelValue qd = green_g_tilde(0.5, 1.2, 1.9, dom, base, q, ctl, TildePath::Quadrature);
  CHECK(std::abs(cf.value - qd.value) <= 1e-6 * std::abs(cf.value));
  CHECK(green_g_tilde_checked(0.5, 1.2, 1.9, dom, base, q, ctl).value == cf.value);
}

TEST_CASE("initial-data kernel reproduces sin x as t -> 0") {
  // int_0^pi sin(xi) G~(t, pi/2, xi) dxi; references from tests/oracles/modal.py
  const GreensKernels gk(dom, base, ctl);
  auto project = [&](double t) {
    std::vector<double> br;
    for (int k = 0; k <= 64; ++k) br.push_back(pi * k / 64);
    br.push_back(pi / 2 - 1e-3);
    br.push_back(pi / 2 + 1e-3);
    std::sort(br.begin(), br.end());
    std::vector<double> x, w;
    append_composite(br, 0.05, 8, x, w);
    double s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * std::sin(x[i]) * gk.g_tilde(t, pi / 2, x[i]).value;
    return s;
  };
  const double z2 = project(1e-2), z3 = project(1e-3);
  CHECK(z2 == doctest::Approx(0.8961738541766792).epsilon(1e-6));
  CHECK(z3 == doctest::Approx(0.96527871560003119).epsilon(1e-6));
  // the limit is approached like t^beta, so at beta = 0.5 the gap at t = 1e-3 is still about 0.035
  CHECK(std::abs(z3 - 1) < std::abs(z2 - 1));
}

TEST_CASE("image truncation is reported") {
  SeriesControl narrow = ctl;
  narrow.n_images = 1;
  CHECK_THROWS_AS(green_g(2.0, 0.3, 0.0, 0.4, dom, base, narrow), Error);
}
