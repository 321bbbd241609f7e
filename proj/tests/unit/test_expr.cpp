#include <cmath>

#include "doctest.h"
#include "prab/error.hpp"
#include "prab/expr.hpp"

using prab::Expr;

TEST_CASE("arithmetic and precedence") {
  CHECK(Expr::parse("1 + 2 * 3")(0, 0) == 7);
  CHECK(Expr::parse("(1 + 2) * 3")(0, 0) == 9);
  CHECK(Expr::parse("2 ^ 3 ^ 2")(0, 0) == 512);
  CHECK(Expr::parse("-2 ^ 2")(0, 0) == -4);
  CHECK(Expr::parse("8 / 4 / 2")(0, 0) == 1);
  CHECK(Expr::parse("1.5e2 - 50")(0, 0) == 100);
}

TEST_CASE("variables and functions") {
  const Expr e = Expr::parse("t * sin(x) + exp(-t) * sqrt(abs(x - pi))");
  const double t = 0.7, x = 1.1;
  CHECK(e(t, x) == doctest::Approx(t * std::sin(x) + std::exp(-t) * std::sqrt(std::abs(x - M_PI))));
  CHECK(Expr::parse("log(exp(2)) + cos(0) + tan(0)")(0, 0) == doctest::Approx(3));
}

TEST_CASE("literal zero detection") {
  CHECK(Expr::parse("0").is_zero());
  CHECK(Expr::parse(" 0.0 ").is_zero());
  CHECK_FALSE(Expr::parse("0*x").is_zero());
  CHECK_FALSE(Expr::parse("1").is_zero());
}

TEST_CASE("syntax errors are config errors") {
  for (const char* bad : {"", "1 +", "sin(", "foo(x)", "2 3", "y", "((1)"}) {
    CAPTURE(bad);
    try {
      Expr::parse(bad);
      FAIL("accepted");
    } catch (const prab::Error& e) {
      CHECK(e.kind() == prab::ErrorKind::InvalidConfig);
    }
  }
}
