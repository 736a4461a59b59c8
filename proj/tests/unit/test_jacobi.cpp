#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "gjp/jacobi.hpp"

using gjp::JacobiParams;

namespace {

double binom(double n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r *= (n - k + i) / i;
  return r;
}

// Explicit sum P_n = sum_s C(n+a, n-s) C(n+b, s) ((x-1)/2)^s ((x+1)/2)^(n-s),
// divided by P_n(1) = C(n+a, n).
double explicit_R(double a, double b, int n, double x) {
  double s = 0.0;
  for (int k = 0; k <= n; ++k)
    s += binom(n + a, n - k) * binom(n + b, k) * std::pow((x - 1) / 2, k) * std::pow((x + 1) / 2, n - k);
  return s / binom(n + a, n);
}

double legendre(int n, double x) { return std::legendre(static_cast<unsigned>(n), x); }

const std::vector<double> kXs{-1.0, -0.93, -0.5, -0.11, 0.0, 0.27, 0.5, 0.81, 0.999, 1.0};

}  // namespace

TEST(Jacobi, MatchesExplicitSum) {
  for (auto [a, b] : std::vector<std::pair<double, double>>{{1, 2}, {2, 1}, {2, 3}, {3, 2}, {0.5, -0.5}, {0, 0}}) {
    const JacobiParams p(a, b);
    for (int n = 0; n <= 14; ++n)
      for (double x : kXs) EXPECT_NEAR(gjp::eval_R(p, n, x), explicit_R(a, b, n, x), 1e-11) << a << "," << b << " n=" << n << " x=" << x;
  }
}

TEST(Jacobi, LegendreAndChebyshevSpecialCases) {
  const JacobiParams leg(0, 0), cheb(0.5, 0.5);
  for (int n = 0; n <= 30; ++n) {
    for (double x : kXs) {
      EXPECT_NEAR(gjp::eval_R(leg, n, x), legendre(n, x), 1e-13);
      // U_n(x) / (n + 1)
      if (std::abs(x) < 1) {
        const double t = std::acos(x);
        EXPECT_NEAR(gjp::eval_R(cheb, n, x), std::sin((n + 1) * t) / std::sin(t) / (n + 1), 1e-13);
      }
    }
  }
}

TEST(Jacobi, EndpointNormalization) {
  for (auto [a, b] : std::vector<std::pair<double, double>>{{1, 2}, {2, 1}, {2, 3}, {3, 2}}) {
    const JacobiParams p(a, b);
    for (int n = 0; n <= 60; ++n) {
      EXPECT_DOUBLE_EQ(gjp::eval_R(p, n, 1.0), 1.0);
      // R_n(-1) = (-1)^n (b+1)_n / (a+1)_n
      const double expect = (n % 2 ? -1.0 : 1.0) * gjp::pochhammer(b + 1, n) / gjp::pochhammer(a + 1, n);
      EXPECT_NEAR(gjp::eval_R(p, n, -1.0), expect, 1e-12 * std::abs(expect));
    }
  }
}

TEST(Jacobi, SequenceMatchesSingleEvaluation) {
  const JacobiParams p(2, 3);
  std::vector<double> out(25);
  for (double x : kXs) {
    gjp::eval_R_sequence(p, x, out);
    for (int n = 0; n < 25; ++n) EXPECT_DOUBLE_EQ(out[static_cast<std::size_t>(n)], gjp::eval_R(p, n, x));
  }
}

TEST(Jacobi, DerivativeMatchesFiniteDifferences) {
  const double h = 1e-5;
  for (auto [a, b] : std::vector<std::pair<double, double>>{{1, 2}, {3, 2}}) {
    const JacobiParams p(a, b);
    for (int n = 0; n <= 12; ++n) {
      for (double x : {-0.7, -0.2, 0.3, 0.85}) {
        const double fd1 = (gjp::eval_R(p, n, x + h) - gjp::eval_R(p, n, x - h)) / (2 * h);
        const double fd2 = (gjp::eval_R(p, n, x + h) - 2 * gjp::eval_R(p, n, x) + gjp::eval_R(p, n, x - h)) / (h * h);
        EXPECT_NEAR(gjp::eval_R_derivative(p, n, 1, x), fd1, 1e-5 * (1 + std::abs(fd1)));
        EXPECT_NEAR(gjp::eval_R_derivative(p, n, 2, x), fd2, 1e-3 * (1 + std::abs(fd2)));
      }
    }
  }
}

TEST(Jacobi, DerivativeChainsAndVanishesAboveDegree) {
  // q = 0 is the identity; derivatives above the degree vanish.
  const JacobiParams p(1, 2);
  for (int n = 0; n <= 10; ++n) {
    for (double x : {-0.4, 0.6}) {
      EXPECT_DOUBLE_EQ(gjp::eval_R_derivative(p, n, 0, x), gjp::eval_R(p, n, x));
      if (n < 3) EXPECT_EQ(gjp::eval_R_derivative(p, n, 3, x), 0.0);
    }
  }
  // D^n R_n is the constant n! times the leading coefficient.
  for (int n = 1; n <= 10; ++n) {
    double fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    EXPECT_NEAR(gjp::eval_R_derivative(p, n, n, 0.3), fact * gjp::leading_coefficient(p, n),
                1e-10 * fact * std::abs(gjp::leading_coefficient(p, n)));
  }
}

TEST(Jacobi, LeadingCoefficientFromExplicitSum) {
  // Top coefficient of the explicit sum: sum_s C(n+a,n-s) C(n+b,s) / 2^n / C(n+a,n).
  for (auto [a, b] : std::vector<std::pair<double, double>>{{1, 2}, {2, 3}, {0.5, 1.5}}) {
    const JacobiParams p(a, b);
    for (int n = 0; n <= 15; ++n) {
      double s = 0;
      for (int k = 0; k <= n; ++k) s += binom(n + a, n - k) * binom(n + b, k);
      const double expect = s / std::pow(2.0, n) / binom(n + a, n);
      EXPECT_NEAR(gjp::leading_coefficient(p, n), expect, 1e-12 * expect);
    }
  }
}

TEST(Jacobi, NormClosedForms) {
  for (int k = 0; k <= 40; ++k) {
    const double k1 = k + 1, k2 = k + 2, k3 = k + 3, k4 = k + 4, k5 = k + 5;
    EXPECT_NEAR(gjp::norm_h(JacobiParams(1, 2), k), 8 / (k1 * k2 * k3), 1e-15);
    EXPECT_NEAR(gjp::norm_h(JacobiParams(2, 3), k), 128 / (k1 * k2 * k3 * k4 * k5), 1e-15);
  }
  // Legendre: 2 / (2n + 1).
  for (int n = 0; n <= 20; ++n) EXPECT_NEAR(gjp::norm_h(JacobiParams(0, 0), n), 2.0 / (2 * n + 1), 1e-15);
  // Chebyshev U: pi / 2 / (n+1)^2 after normalization.
  for (int n = 0; n <= 20; ++n)
    EXPECT_NEAR(gjp::norm_h(JacobiParams(0.5, 0.5), n), std::numbers::pi / 2 / ((n + 1.0) * (n + 1.0)), 1e-14);
}

TEST(Jacobi, Pochhammer) {
  EXPECT_EQ(gjp::pochhammer(3.5, 0), 1.0);
  EXPECT_EQ(gjp::pochhammer(1, 5), 120.0);
  EXPECT_DOUBLE_EQ(gjp::pochhammer(0.5, 3), 0.5 * 1.5 * 2.5);
  EXPECT_EQ(gjp::pochhammer(-2, 3), 0.0);
}

TEST(Jacobi, RejectsInvalidParameters) {
  EXPECT_THROW(JacobiParams(-1, 0), std::domain_error);
  EXPECT_THROW(JacobiParams(0, -1.5), std::domain_error);
  EXPECT_NO_THROW(JacobiParams(-0.5, -0.5));
  const JacobiParams p(1, 2);
  EXPECT_EQ(p.shifted(2), JacobiParams(3, 4));
  EXPECT_DOUBLE_EQ(p.lambda(), 4.0);
  EXPECT_THROW(gjp::eval_R(p, -1, 0.0), std::domain_error);
  EXPECT_THROW(gjp::norm_h(p, -1), std::domain_error);
  EXPECT_THROW(gjp::pochhammer(1.0, -1), std::domain_error);
}
