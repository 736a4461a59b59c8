#pragma once

#include <vector>

#include "gjp/jacobi.hpp"
#include "gjp/polynomial.hpp"

namespace gjp {

/// Order of the odd-order boundary value problem.
enum class Order : int { third = 3, fifth = 5 };

constexpr int as_int(Order o) noexcept { return static_cast<int>(o); }

/// Number of boundary conditions, i.e. how many degrees of freedom the basis
/// loses relative to P_N: 2 for third order, 4 for fifth order.
constexpr int dimension_deficit(Order o) noexcept { return o == Order::third ? 2 : 4; }

/// Index pair (ell, m) of a generalized Jacobi polynomial J_k^{(ell,m)}.
struct GJPIndex {
  int ell;
  int m;

  /// Lowest admissible degree k0 of the matching branch.
  int offset() const noexcept;
  friend bool operator==(const GJPIndex&, const GJPIndex&) = default;
};

/// J_k^{(ell,m)}(x), defined piecewise by the signs of ell and m; for
/// ell, m <= -1 it is (1-x)^{-ell} (1+x)^{-m} R_{k-k0}^{(-ell,-m)}(x).
/// Throws std::domain_error for k < k0.
double eval_J(GJPIndex idx, int k, double x);

enum class BasisKind { trial, test };

/// The trial space V_N (phi_k) or test space V_N^* (psi_k) at truncation N.
class BasisFamily {
 public:
  /// Throws std::invalid_argument when N < order.
  BasisFamily(Order order, BasisKind kind, int truncation);

  Order order() const noexcept { return order_; }
  BasisKind kind() const noexcept { return kind_; }
  int truncation() const noexcept { return truncation_; }
  int dimension() const noexcept { return truncation_ - dimension_deficit(order_); }

  /// The generalized index of the family: (-2,-1)/(-1,-2) or (-3,-2)/(-2,-3).
  GJPIndex index() const noexcept;
  /// Classical indexes of the R_k factor.
  JacobiParams jacobi() const;
  /// Polynomial weight factor multiplying R_k.
  const Polynomial& weight() const noexcept;

  /// D^q of the k-th basis function at x.
  double eval(int k, double x, int q = 0) const;

 private:
  Order order_;
  BasisKind kind_;
  int truncation_;
};

/// D^q phi_k(x) for the trial basis
///   order 3: phi_k = (1-x^2)(1-x) R_k^{(2,1)},   order 5: phi_k = (1-x^2)^2(1-x) R_k^{(3,2)},
/// by the Leibniz rule over the weight factor and eval_R_derivative.
double eval_phi(Order order, int k, double x, int q = 0);

/// D^q psi_k(x) for the test basis
///   order 3: psi_k = (1-x^2)(1+x) R_k^{(1,2)},   order 5: psi_k = (1-x^2)^2(1+x) R_k^{(2,3)}.
double eval_psi(Order order, int k, double x, int q = 0);

/// Classical indexes of the test basis, which are also the weight indexes of
/// the right-hand-side projection: (1,2) for order 3, (2,3) for order 5.
JacobiParams test_jacobi(Order order);
/// Classical indexes of the trial basis: (2,1) or (3,2).
JacobiParams trial_jacobi(Order order);

/// Legendre series sum_i coefficients[i] L_{lowest_degree + i}(x).
struct LegendreExpansion {
  int lowest_degree = 0;
  std::vector<double> coefficients;

  double operator()(double x) const;
};

/// Closed-form Legendre expansion of J_k^{(ell,m)} for the four index pairs
/// (-2,-1), (-1,-2) (k >= 3) and (-3,-2), (-2,-3) (k >= 5). The leading
/// factor is folded into the coefficients. Throws std::invalid_argument for
/// other pairs and std::domain_error for k below the range.
LegendreExpansion legendre_expansion_J(GJPIndex idx, int k);

}  // namespace gjp
