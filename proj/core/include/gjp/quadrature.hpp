#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gjp/jacobi.hpp"

namespace gjp {

/// Gauss-Jacobi rule: sum_i w_i g(x_i) approximates the integral of
/// (1-x)^alpha (1+x)^beta g(x) over (-1, 1), exactly for deg g <= 2 count - 1.
class QuadratureRule {
 public:
  QuadratureRule(JacobiParams params, std::vector<double> nodes, std::vector<double> weights);

  const JacobiParams& params() const noexcept { return params_; }
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }
  std::size_t count() const noexcept { return nodes_.size(); }

  template <typename F>
  double integrate(F&& g) const {
    double s = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) s += weights_[i] * g(nodes_[i]);
    return s;
  }

 private:
  JacobiParams params_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Nodes are the roots of R_count, found by safeguarded Newton iteration
/// inside sign-change brackets on a Chebyshev-angle grid. Throws
/// ConvergenceError if a root does not settle to 1e-14 within 200 iterations.
QuadratureRule gauss_jacobi_rule(const JacobiParams& params, int count);

}  // namespace gjp
