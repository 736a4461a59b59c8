#include "gjp/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "gjp/errors.hpp"

namespace gjp {

QuadratureRule::QuadratureRule(JacobiParams params, std::vector<double> nodes,
                               std::vector<double> weights)
    : params_(params), nodes_(std::move(nodes)), weights_(std::move(weights)) {
  if (nodes_.size() != weights_.size() || nodes_.empty()) {
    throw std::invalid_argument("QuadratureRule: nodes and weights must be non-empty and equal length");
  }
}

namespace {

constexpr int kMaxIterations = 200;
constexpr double kTolerance = 1e-14;

struct Value {
  double r;   // R_n(x)
  double dr;  // R_n'(x)
};

Value value_and_slope(const JacobiParams& p, int n, double x) {
  return {eval_R(p, n, x), eval_R_derivative(p, n, 1, x)};
}

// Root of R_n in (lo, hi), where R_n changes sign exactly once.
double bracketed_root(const JacobiParams& p, int n, double lo, double hi) {
  double f_lo = eval_R(p, n, lo);
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < kMaxIterations; ++it) {
    const auto [f, df] = value_and_slope(p, n, x);
    if (f == 0.0) return x;
    if ((f < 0.0) == (f_lo < 0.0)) {
      lo = x;
      f_lo = f;
    } else {
      hi = x;
    }
    double next = x - f / df;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = next - x;
    x = next;
    if (std::abs(step) <= kTolerance) {
      // One more Newton correction once inside the quadratic basin.
      const auto [f2, df2] = value_and_slope(p, n, x);
      const double polished = x - f2 / df2;
      return (polished > lo && polished < hi) ? polished : x;
    }
  }
  throw ConvergenceError("gauss_jacobi_rule: Newton iteration did not converge for root in (" +
                         std::to_string(lo) + ", " + std::to_string(hi) + ") of R_" +
                         std::to_string(n));
}

}  // namespace

QuadratureRule gauss_jacobi_rule(const JacobiParams& params, int count) {
  if (count < 1) throw std::invalid_argument("gauss_jacobi_rule: count must be >= 1");

  const double a = params.alpha();
  const double b = params.beta();
  const double lam = params.lambda();

  std::vector<double> roots;
  if (count == 1) {
    roots.push_back((b - a) / (lam + 1.0));
  } else {
    // Bracket every root by a sign change of R_count on x = -cos(theta) with
    // theta uniform; refine the grid until all count roots are separated.
    for (int m = 4 * count + 4;; m *= 2) {
      if (m > 64 * count + 64) {
        throw ConvergenceError("gauss_jacobi_rule: could not bracket the roots of R_" +
                               std::to_string(count));
      }
      roots.clear();
      double x_prev = -1.0;
      double f_prev = eval_R(params, count, x_prev);
      for (int j = 1; j <= m; ++j) {
        const double x = j == m ? 1.0 : -std::cos(std::numbers::pi * j / m);
        const double f = eval_R(params, count, x);
        if ((f < 0.0) != (f_prev < 0.0)) roots.push_back(bracketed_root(params, count, x_prev, x));
        x_prev = x;
        f_prev = f;
      }
      if (roots.size() == static_cast<std::size_t>(count)) break;
    }
  }

  // Christoffel numbers: 1 / w_i = sum_k R_k(x_i)^2 / h_k. All terms are
  // positive, so this is far less sensitive to rounding than R_{n-1} R_n'.
  const std::size_t n = roots.size();
  std::vector<double> inv_h(n);
  for (std::size_t k = 0; k < n; ++k) inv_h[k] = 1.0 / norm_h(params, static_cast<int>(k));
  std::vector<double> r(n);
  std::vector<double> weights(n);
  for (std::size_t i = 0; i < n; ++i) {
    eval_R_sequence(params, roots[i], r);
    double t = 0.0;
    for (std::size_t k = 0; k < n; ++k) t += r[k] * r[k] * inv_h[k];
    weights[i] = 1.0 / t;
  }
  return QuadratureRule(params, std::move(roots), std::move(weights));
}

}  // namespace gjp
