#include <cmath>
#include <numbers>

#include "doctest.h"
#include "prab/error.hpp"
#include "prab/specfun.hpp"

using namespace prab;

namespace {

const SeriesControl ctl;
const FracParams base = FracParams::make(0.8, 0.5, 0.3, 0.5);

// tests/oracles/reference_values.py
constexpr double kPrab = 1.1458118042441620822;       // E^{0.3}_{0.8,0.9}(0.5)
constexpr double kW1 = 0.98628210728151694888;        // W(1), example parameters
constexpr double kOmegaE12 = 0.094992574724035935032;  // omega instantiation at (-0.7, 0.2)
constexpr double kGreenY0 = 0.22196203313841763143;    // Green instantiation at (-0.9, 0)

}  // namespace

TEST_CASE("reciprocal gamma") {
  CHECK(recip_gamma(1.0) == 1.0);
  CHECK(recip_gamma(-3.0) == 0.0);
  CHECK(recip_gamma(0.0) == 0.0);
  CHECK(recip_gamma(0.5) == doctest::Approx(1 / std::sqrt(std::numbers::pi)).epsilon(1e-15));
  CHECK(recip_gamma(-2.5) == doctest::Approx(1 / std::tgamma(-2.5)).epsilon(1e-14));
  CHECK(recip_gamma(180.0) == 0.0);
  CHECK(recip_gamma(5.0) == doctest::Approx(1.0 / 24).epsilon(1e-15));
}

TEST_CASE("Pochhammer symbol") {
  CHECK(pochhammer(0.3, 0) == 1.0);
  CHECK(pochhammer(1.0, 5) == 120.0);
  CHECK(pochhammer(-2.0, 4) == 0.0);
  CHECK(pochhammer(-0.15, 2) == doctest::Approx(-0.1275).epsilon(1e-15));
}

TEST_CASE("Prabhakar function") {
  CHECK(prabhakar_ml(0.8, 0.9, 0.0, 7.3, ctl) == recip_gamma(0.9));
  CHECK(prabhakar_ml(1, 1, 1, 1, ctl) == doctest::Approx(std::numbers::e).epsilon(1e-15));
  CHECK(prabhakar_ml(0.8, 0.9, 0.3, 0.5, ctl) == doctest::Approx(kPrab).epsilon(1e-14));
  CHECK(prabhakar_ml(1, 2, 1, -3.0, ctl) == doctest::Approx((1 - std::exp(-3.0)) / 3).epsilon(1e-13));
  const PrabhakarSeries E(0.8, 0.9, 0.3, ctl);
  CHECK(E(0.5) == prabhakar_ml(0.8, 0.9, 0.3, 0.5, ctl));
}

TEST_CASE("Prabhakar series reports non-convergence") {
  SeriesControl small = ctl;
  small.k_max = 10;
  CHECK_THROWS_AS(prabhakar_ml(1, 1, 1, 30.0, small), Error);
}

TEST_CASE("Wright-type function") {
  CHECK(wright_e(0.7, 0.2, 1.5, 0.8, 0.0, ctl) == doctest::Approx(recip_gamma(1.5) * recip_gamma(0.8)));
  CHECK(wright_e(1, 0, 1, 1, 1, ctl) == doctest::Approx(std::numbers::e).epsilon(1e-15));
  // z e(z) -> -1/(Gamma(mu - alpha) Gamma(delta + beta)); with mu = 2 and delta = 1 - beta the
  // algebraic corrections vanish and the limit is reached to rounding by z = -20
  const double b = 0.05;
  CHECK(-20 * wright_e(1, b, 2, 1 - b, -20, ctl) == doctest::Approx(-1).epsilon(1e-6));
  CHECK_THROWS_AS(wright_e(0, b, 2, 1, 1, ctl), Error);
}

TEST_CASE("bivariate series") {
  E12Params g;
  g.a1 = 0.5, g.b1 = 0.7, g.d1 = 1.3;
  g.a2 = 1, g.b2 = 1, g.d2 = 2;
  g.d3 = 1;
  CHECK(bivariate_e12(g, 0, 0, ctl) == doctest::Approx(std::tgamma(1.3)).epsilon(1e-15));

  CHECK(bivariate_e12(e12_omega(base), -0.7, 0.2, ctl) == doctest::Approx(kOmegaE12).epsilon(1e-12));
  CHECK(bivariate_e12(e12_green(base), -0.9, 0.0, ctl) == doctest::Approx(kGreenY0).epsilon(1e-12));

  E12Params div = g;
  div.a1 = 5;
  CHECK_THROWS_AS(bivariate_e12(div, 0.1, 0.1, ctl), Error);

  E12Params pole;
  pole.a1 = 1, pole.b1 = 1, pole.d1 = -1;
  pole.a2 = 1, pole.b2 = 1, pole.d2 = 1;
  try {
    bivariate_e12(pole, 0.1, 0.1, ctl);
    FAIL("pole accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnfoldablePole);
  }
}

TEST_CASE("kernel antiderivative W") {
  CHECK(kernel_antiderivative_W(0, base, ctl) == 0.0);
  CHECK(kernel_antiderivative_W(1, base, ctl) == doctest::Approx(kW1).epsilon(1e-14));
  const FracParams p0 = FracParams::make(0.8, 0.5, 0.0, 0.5);
  CHECK(kernel_antiderivative_W(1, p0, ctl) == doctest::Approx(1 / std::tgamma(1.5)).epsilon(1e-15));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(FracParams::make(0.8, 1.0, 0.3, 0.5), Error);
  CHECK_THROWS_AS(FracParams::make(0.8, 0.0, 0.3, 0.5), Error);
  CHECK_THROWS_AS(FracParams::make(-0.1, 0.5, 0.3, 0.5), Error);
  const FracParams p = FracParams::make(0.8, 0.7, 0.3, 0.5);
  CHECK(p.beta1 == 0.35);
  CHECK(p.gamma1 == 0.15);
  SeriesControl bad = ctl;
  bad.n_images = 0;
  CHECK_THROWS_AS(bad.validate(), Error);
}
