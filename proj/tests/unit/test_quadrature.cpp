#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "gjp/polynomial.hpp"
#include "gjp/quadrature.hpp"

using gjp::JacobiParams;

namespace {

// Integral of a polynomial over (-1, 1).
double integrate_exact(const gjp::Polynomial& p) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.coefficients().size(); i += 2) s += 2.0 * p.coefficients()[i] / (i + 1.0);
  return s;
}

}  // namespace

TEST(Quadrature, GaussLegendreClosedForms) {
  const auto r2 = gjp::gauss_jacobi_rule(JacobiParams(0, 0), 2);
  EXPECT_NEAR(r2.nodes()[0] * r2.nodes()[1], -1.0 / 3.0, 1e-15);
  EXPECT_NEAR(r2.weights()[0], 1.0, 1e-15);
  EXPECT_NEAR(r2.weights()[1], 1.0, 1e-15);

  const auto r3 = gjp::gauss_jacobi_rule(JacobiParams(0, 0), 3);
  std::vector<double> x(r3.nodes().begin(), r3.nodes().end());
  std::vector<double> w(r3.weights().begin(), r3.weights().end());
  std::vector<std::size_t> idx{0, 1, 2};
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return x[a] < x[b]; });
  EXPECT_NEAR(x[idx[0]], -std::sqrt(0.6), 1e-15);
  EXPECT_NEAR(x[idx[1]], 0.0, 1e-15);
  EXPECT_NEAR(x[idx[2]], std::sqrt(0.6), 1e-15);
  EXPECT_NEAR(w[idx[0]], 5.0 / 9, 1e-15);
  EXPECT_NEAR(w[idx[1]], 8.0 / 9, 1e-15);
}

TEST(Quadrature, ChebyshevSecondKindClosedForm) {
  // Nodes cos(k pi / (n+1)), weights pi/(n+1) sin^2(k pi / (n+1)).
  for (int n : {1, 4, 9, 30}) {
    const auto r = gjp::gauss_jacobi_rule(JacobiParams(0.5, 0.5), n);
    std::vector<double> x(r.nodes().begin(), r.nodes().end());
    std::vector<double> expect;
    for (int k = 1; k <= n; ++k) expect.push_back(std::cos(k * std::numbers::pi / (n + 1)));
    std::sort(x.begin(), x.end());
    std::sort(expect.begin(), expect.end());
    for (int i = 0; i < n; ++i) EXPECT_NEAR(x[static_cast<std::size_t>(i)], expect[static_cast<std::size_t>(i)], 1e-14);
    for (std::size_t i = 0; i < r.count(); ++i) {
      const double s = std::sin(std::acos(r.nodes()[i]));
      EXPECT_NEAR(r.weights()[i], std::numbers::pi / (n + 1) * s * s, 1e-14);
    }
  }
}

TEST(Quadrature, ExactForPolynomialsUpToDegreeTwoCountMinusOne) {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 2}, {0, 0}}) {
    const gjp::Polynomial w = gjp::Polynomial::endpoint_weight(a, b);
    for (int count : {1, 3, 8, 17, 33}) {
      const auto rule = gjp::gauss_jacobi_rule(JacobiParams(a, b), count);
      for (int d = 0; d < 2 * count; ++d) {
        std::vector<double> mono(static_cast<std::size_t>(d) + 1, 0.0);
        mono.back() = 1.0;
        const double exact = integrate_exact(w * gjp::Polynomial(mono));
        const double approx = rule.integrate([d](double x) { return std::pow(x, d); });
        EXPECT_NEAR(approx, exact, 1e-13 * std::max(1.0, std::abs(exact))) << a << b << " count=" << count << " d=" << d;
      }
    }
  }
}

TEST(Quadrature, NodesAreInteriorSortedDistinctAndWeightsPositive) {
  for (int count : {1, 2, 7, 64, 320}) {
    const auto rule = gjp::gauss_jacobi_rule(JacobiParams(2, 3), count);
    ASSERT_EQ(rule.count(), static_cast<std::size_t>(count));
    double total = 0;
    for (std::size_t i = 0; i < rule.count(); ++i) {
      EXPECT_GT(rule.nodes()[i], -1.0);
      EXPECT_LT(rule.nodes()[i], 1.0);
      EXPECT_GT(rule.weights()[i], 0.0);
      total += rule.weights()[i];
      // A root to working precision: |R| within a few ulps of x times |R'|.
      const double x = rule.nodes()[i];
      EXPECT_NEAR(gjp::eval_R(JacobiParams(2, 3), count, x), 0.0,
                  64 * std::numeric_limits<double>::epsilon() * std::abs(gjp::eval_R_derivative(JacobiParams(2, 3), count, 1, x)) + 1e-14);
    }
    std::vector<double> x(rule.nodes().begin(), rule.nodes().end());
    std::sort(x.begin(), x.end());
    EXPECT_EQ(std::adjacent_find(x.begin(), x.end()), x.end());
    // Weights sum to h_0 = integral of the weight.
    EXPECT_NEAR(total, gjp::norm_h(JacobiParams(2, 3), 0), 1e-13);
  }
}

TEST(Quadrature, SingleNodeIsTheMean) {
  for (auto [a, b] : std::vector<std::pair<double, double>>{{1, 2}, {3, 2}, {0, 0}}) {
    const auto r = gjp::gauss_jacobi_rule(JacobiParams(a, b), 1);
    EXPECT_NEAR(r.nodes()[0], (b - a) / (a + b + 2), 1e-15);
  }
}

TEST(Quadrature, RejectsBadInput) {
  EXPECT_THROW(gjp::gauss_jacobi_rule(JacobiParams(1, 2), 0), std::invalid_argument);
  EXPECT_THROW(gjp::QuadratureRule(JacobiParams(0, 0), {0.0}, {}), std::invalid_argument);
}
