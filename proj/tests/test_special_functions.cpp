#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "boxpot/special_functions.hpp"
#include "support/oracles.hpp"

using namespace boxpot;

TEST_CASE("erfc basics") {
  CHECK(erfc(0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(erfc(1.0) - 0.15729920705028513) < 1e-16);
  CHECK(std::abs(erfc(-0.7) - (2.0 - erfc(0.7))) < 1e-15);
  CHECK_THROWS_AS(erfc(std::numeric_limits<double>::infinity()), std::domain_error);
  CHECK_THROWS_AS(erfc(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
}

TEST_CASE("erfc against the series/continued-fraction reference") {
  for (double x : {0.0, 0.1, 0.25, 0.5, 0.7, 1.0, 1.5, 2.0, 2.5, 2.9, 3.0, 3.5,
                   4.0, 5.0, 6.0, 8.0, 10.0, 15.0, 20.0, 26.0}) {
    CAPTURE(x);
    CHECK(std::abs(erfc(x) - oracles::erfc_reference(x)) <= 1e-15);
    CHECK(std::abs(erfc(-x) - oracles::erfc_reference(-x)) <= 1e-15);
  }
  CHECK(erfc(1e308) == 0.0);
  CHECK(erfc(-1e308) == 2.0);
}

TEST_CASE("erfc range and monotonicity") {
  double prev = 2.0;
  for (double x = -8.0; x <= 8.0; x += 0.125) {
    const double value = erfc(x);
    CHECK(value > 0.0);
    CHECK(value < 2.0);
    CHECK(value <= prev);
    prev = value;
  }
}

TEST_CASE("erfc reflection on random points") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-5.0, 5.0);
  for (int i = 0; i < 100; ++i) {
    const double x = dist(rng);
    CHECK(std::abs(erfc(x) + erfc(-x) - 2.0) <= 1e-15);
  }
}

TEST_CASE("hermite recurrence examples") {
  CHECK(hermite(0, 3.7) == 1.0);
  CHECK(hermite(2, 1.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(hermite(3, 2.0) == doctest::Approx(40.0).epsilon(1e-14));
  CHECK_THROWS_AS(hermite(-1, 0.0), std::domain_error);
}

TEST_CASE("hermite matches the Rodrigues closed forms") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dist(-5.0, 5.0);
  for (int k = 0; k <= 6; ++k) {
    for (int i = 0; i < 200; ++i) {
      const double x = dist(rng);
      const double expected = oracles::hermite_closed_form(k, x);
      const double scale = std::max(1.0, std::abs(expected));
      CHECK(std::abs(hermite(k, x) - expected) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("laguerre recurrence") {
  CHECK(laguerre(0, -0.5, 3.3) == 1.0);
  CHECK(laguerre(0, 2.0, -7.0) == 1.0);
  CHECK(laguerre(1, 0.5, 1.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK_THROWS_AS(laguerre(1, -1.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(laguerre(1, -1.5, 0.5), std::domain_error);

  std::mt19937 rng(13);
  std::uniform_real_distribution<double> dist(0.0, 8.0);
  for (int k = 0; k <= 5; ++k)
    for (double gamma : {-0.5, 0.5, 1.0})
      for (int i = 0; i < 50; ++i) {
        const double x = dist(rng);
        const double expected = oracles::laguerre_series(k, gamma, x);
        CHECK(std::abs(laguerre(k, gamma, x) - expected) <=
              1e-10 * std::max(1.0, std::abs(expected)));
      }
}

TEST_CASE("Hermite-Laguerre identity H_2k(x) = (-1)^k 4^k k! L_k^{(-1/2)}(x^2)") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  for (int k = 0; k <= 3; ++k) {
    double factor = 1.0;
    for (int i = 1; i <= k; ++i) factor *= 4.0 * i;
    if (k % 2 == 1) factor = -factor;
    for (int i = 0; i < 40; ++i) {
      const double x = (i == 0) ? 0.9 : dist(rng);  // the documented spot check first
      const double lhs = hermite(2 * k, x);
      const double rhs = factor * laguerre(k, -0.5, x * x);
      CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
    }
  }
}

TEST_CASE("eta basis closed form and moments") {
  const double inv_sqrt_pi = 1.0 / std::sqrt(M_PI);
  CHECK(eta_basis(PolynomialOrder(1), 0.0) == doctest::Approx(inv_sqrt_pi).epsilon(1e-15));
  for (double x : {0.0, 0.3, -1.2})
    CHECK(eta_basis(PolynomialOrder(1), x) ==
          doctest::Approx(inv_sqrt_pi * std::exp(-x * x)).epsilon(1e-14));

  // moment conditions: int x^j eta_{2M} = delta_{j,0} for 0 <= j < 2M
  for (int m = 1; m <= 3; ++m) {
    for (int j = 0; j < 2 * m; ++j) {
      const double moment = oracles::integrate(
          [&](double x) { return std::pow(x, j) * eta_basis(PolynomialOrder(m), x); },
          -10.0, 10.0, 80);
      CAPTURE(m);
      CAPTURE(j);
      CHECK(std::abs(moment - (j == 0 ? 1.0 : 0.0)) <= 1e-12);
    }
  }
}

TEST_CASE("polynomial order invariant") {
  CHECK_THROWS_AS(PolynomialOrder(0), std::domain_error);
  CHECK_THROWS_AS(PolynomialOrder(-2), std::domain_error);
  CHECK(PolynomialOrder(4).value() == 4);
}
