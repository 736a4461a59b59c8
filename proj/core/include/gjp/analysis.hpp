#pragma once

#include <functional>
#include <vector>

#include "gjp/assembly.hpp"
#include "gjp/banded.hpp"

namespace gjp {

/// u_N = sum a_k phi_k - lift.
struct SpectralSolution {
  Order order = Order::third;
  int N = 0;
  std::vector<double> coefficients;
  LiftPolynomial lift;
};

double evaluate_solution(const SpectralSolution& s, double x);

/// max |u_N(x) - exact(x)| over `points` uniformly spaced points of [-1, 1].
double max_pointwise_error(const SpectralSolution& s, const std::function<double(double)>& exact,
                           int points = 1001);

struct SolveReport {
  SpectralSolution solution;
  BandSystem system;
  double residual = 0.0;  // ||D a - f*||_inf
  OpCount factor_ops;
  OpCount solve_ops;
  bool diagonal_path = false;
};

/// Solves an assembled system; zero coefficients take the diagonal fast path.
/// Throws SingularPivotError from the band LU.
SolveReport solve_system(BandSystem system, const OperatorCoefficients& coefficients, int N);

SolveReport solve_third(const ThirdOrderProblem& problem, int N);
SolveReport solve_fifth(const FifthOrderProblem& problem, int N);

struct ConditionReport {
  int n_label = 1;  // 1 for third order, 2 for fifth
  int N = 0;
  double eig_min = 0.0;
  double eig_max = 0.0;
  double eig_ratio = 0.0;  // eig_max / eig_min
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  double cond = 0.0;             // sigma_max / sigma_min
  double cond_over_power = 0.0;  // cond / N^2 (third) or cond / N^4 (fifth)
};

/// Condition of the diagonal B matrix from its entries.
ConditionReport condition_diagonal(Order order, int N);

/// Extreme eigenvalues of D by power and inverse power iteration (band LU),
/// and the 2-norm condition number from the same iterations on D^T D.
/// Relative tolerance 1e-10; ConvergenceError after 10^4 iterations.
ConditionReport condition_full(Order order, int N,
                               const OperatorCoefficients& coefficients);
ConditionReport condition_full(Order order, int N);

}  // namespace gjp
