#include "gjp/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gjp/errors.hpp"

namespace gjp {

double evaluate_solution(const SpectralSolution& s, double x) {
  double u = 0.0;
  for (std::size_t k = 0; k < s.coefficients.size(); ++k) {
    if (s.coefficients[k] != 0.0) u += s.coefficients[k] * eval_phi(s.order, static_cast<int>(k), x);
  }
  return u - s.lift(x);
}

double max_pointwise_error(const SpectralSolution& s, const std::function<double(double)>& exact,
                           int points) {
  if (points < 2) throw std::invalid_argument("max_pointwise_error: need at least 2 points");
  double worst = 0.0;
  for (int i = 0; i < points; ++i) {
    const double x = i == points - 1 ? 1.0 : -1.0 + 2.0 * i / (points - 1);
    worst = std::max(worst, std::abs(evaluate_solution(s, x) - exact(x)));
  }
  return worst;
}

SolveReport solve_system(BandSystem system, const OperatorCoefficients& c, int N) {
  SolveReport r;
  r.solution.order = system.order;
  r.solution.N = N;
  r.solution.lift = system.lift;
  if (c.all_zero()) {
    r.diagonal_path = true;
    r.solution.coefficients = system.order == Order::third ? solve_diagonal_third(system.rhs)
                                                           : solve_diagonal_fifth(system.rhs);
    r.solve_ops.divisions = system.rhs.size();
  } else {
    const BandedLu lu = lu_factor_banded(system.matrix);
    SolveResult s = lu.solve(system.rhs);
    r.factor_ops = lu.factor_ops();
    r.solve_ops = s.ops;
    r.solution.coefficients = std::move(s.x);
  }
  const std::vector<double> da = system.matrix.multiply(r.solution.coefficients);
  for (std::size_t i = 0; i < da.size(); ++i)
    r.residual = std::max(r.residual, std::abs(da[i] - system.rhs[i]));
  r.system = std::move(system);
  return r;
}

SolveReport solve_third(const ThirdOrderProblem& problem, int N) {
  return solve_system(assemble_third(problem, N), problem.coefficients(), N);
}

SolveReport solve_fifth(const FifthOrderProblem& problem, int N) {
  return solve_system(assemble_fifth(problem, N), problem.coefficients(), N);
}

namespace {

double power_of_N(Order order, int N) {
  const double n2 = static_cast<double>(N) * N;
  return order == Order::third ? n2 : n2 * n2;
}

constexpr double kTolerance = 1e-10;
constexpr int kMaxIterations = 10000;

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Dominant eigenvalue of v -> apply(v) by the Rayleigh quotient of normalized
// iterates. A generic start vector avoids orthogonality to the eigenvector.
template <typename Apply>
double power_iteration(std::size_t n, Apply apply, const char* what) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 0.5 * std::sin(1.0 + static_cast<double>(i));
  double nv = norm2(v);
  for (double& x : v) x /= nv;
  double mu = 0.0;
  for (int it = 0; it < kMaxIterations; ++it) {
    std::vector<double> w = apply(v);
    const double next = dot(v, w);
    nv = norm2(w);
    if (nv == 0.0) return 0.0;
    for (double& x : w) x /= nv;
    v = std::move(w);
    if (it > 0 && std::abs(next - mu) <= kTolerance * std::abs(next)) return next;
    mu = next;
  }
  throw ConvergenceError(std::string(what) + ": power iteration did not converge in " +
                         std::to_string(kMaxIterations) + " iterations");
}

}  // namespace

ConditionReport condition_diagonal(Order order, int N) {
  if (N < as_int(order)) {
    throw std::invalid_argument("condition_diagonal: N=" + std::to_string(N) + " too small");
  }
  const int dim = N - dimension_deficit(order);
  ConditionReport r;
  r.n_label = order == Order::third ? 1 : 2;
  r.N = N;
  r.eig_min = leading_diagonal(order, 0);
  r.eig_max = leading_diagonal(order, dim - 1);
  r.eig_ratio = r.eig_max / r.eig_min;
  r.sigma_min = r.eig_min;
  r.sigma_max = r.eig_max;
  r.cond = r.eig_ratio;
  r.cond_over_power = r.cond / power_of_N(order, N);
  return r;
}

ConditionReport condition_full(Order order, int N, const OperatorCoefficients& coefficients) {
  if (coefficients.order() != order) {
    throw std::invalid_argument("condition_full: coefficient order mismatch");
  }
  const BandedMatrix d = assemble_operator(coefficients, N);
  const BandedLu lu = lu_factor_banded(d);
  const std::size_t n = d.size();

  ConditionReport r;
  r.n_label = order == Order::third ? 1 : 2;
  r.N = N;
  r.eig_max = power_iteration(n, [&](const std::vector<double>& v) { return d.multiply(v); },
                              "largest eigenvalue");
  r.eig_min = 1.0 / power_iteration(n, [&](const std::vector<double>& v) { return lu.solve(v).x; },
                                    "smallest eigenvalue");
  r.eig_ratio = r.eig_max / r.eig_min;

  r.sigma_max = std::sqrt(power_iteration(
      n, [&](const std::vector<double>& v) { return d.multiply_transposed(d.multiply(v)); },
      "largest singular value"));
  r.sigma_min = 1.0 / std::sqrt(power_iteration(
                          n,
                          [&](const std::vector<double>& v) {
                            return lu.solve(lu.solve_transposed(v).x).x;
                          },
                          "smallest singular value"));
  r.cond = r.sigma_max / r.sigma_min;
  r.cond_over_power = r.cond / power_of_N(order, N);
  return r;
}

ConditionReport condition_full(Order order, int N) {
  return condition_full(order, N, OperatorCoefficients::ones(order));
}

}  // namespace gjp
