#pragma once

#include <array>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "gjp/banded.hpp"
#include "gjp/basis.hpp"
#include "gjp/polynomial.hpp"

namespace gjp {

using RhsFunction = std::function<double(double)>;

/// Constant coefficients of the lower-order terms, in matrix order:
///   third order  u''' - a1 u'' - b1 u' + g1 u          -> (a1, b1, g1)   for (E2, E1, E0)
///   fifth order  -u^(5) + a2 u'''' + b2 u''' - g2 u'' - d2 u' + m2 u
///                                                      -> (a2, b2, g2, d2, m2) for (G4 .. G0)
class OperatorCoefficients {
 public:
  static OperatorCoefficients third(double alpha1, double beta1, double gamma1);
  static OperatorCoefficients fifth(double alpha2, double beta2, double gamma2, double delta2,
                                    double mu2);
  static OperatorCoefficients zero(Order order);
  static OperatorCoefficients ones(Order order);
  /// Throws std::invalid_argument unless values.size() is 3 (third) or 5 (fifth).
  static OperatorCoefficients from_values(Order order, std::span<const double> values);

  Order order() const noexcept { return order_; }
  std::span<const double> values() const noexcept {
    return std::span<const double>(values_).first(count());
  }
  std::size_t count() const noexcept { return order_ == Order::third ? 3 : 5; }
  bool all_zero() const noexcept;

  /// w[q] such that L u = sum_q w[q] D^q u.
  std::array<double, 6> derivative_weights() const noexcept;

 private:
  OperatorCoefficients(Order order, std::array<double, 5> v) : order_(order), values_(v) {}
  Order order_;
  std::array<double, 5> values_{};
};

/// Closed form of one diagonal of one operator matrix. For offset d >= 0 the
/// entry sits at (k, k+d), for d < 0 at (k-d, k); value(k) gives it.
struct EntryFormula {
  int matrix;  // index into OperatorCoefficients::values()
  int offset;
  double (*value)(double k);
  std::string_view label;
};

using EntryTable = std::span<const EntryFormula>;

/// Entries used for assembly. They agree with the quadrature oracle.
EntryTable third_order_entries();
EntryTable fifth_order_entries();
EntryTable default_entries(Order order);

/// Entries exactly as published, kept so that disagreements can be reported.
EntryTable printed_third_order_entries();
EntryTable printed_fifth_order_entries();
EntryTable printed_entries(Order order);

/// Diagonal of the highest-derivative matrix: 2(k+1)(k+3) or 3(k+1)(k+2)(k+4)(k+5).
double leading_diagonal(Order order, int k);

/// Largest |offset| among matrices whose coefficient is nonzero.
std::size_t operator_bandwidth(const OperatorCoefficients& coefficients, EntryTable table);

/// B + sum_i c_i M_i, of dimension N-2 (third) or N-4 (fifth), in band storage.
BandedMatrix assemble_operator(const OperatorCoefficients& coefficients, int N,
                               EntryTable table = {});

struct ThirdOrderBoundary {
  double a_minus = 0.0;  // u(-1)
  double a_plus = 0.0;   // u(1)
  double a1_plus = 0.0;  // u'(1)
};

struct FifthOrderBoundary {
  double a_minus = 0.0;   // u(-1)
  double a_plus = 0.0;    // u(1)
  double a1_minus = 0.0;  // u'(-1)
  double a1_plus = 0.0;   // u'(1)
  double a2_plus = 0.0;   // u''(1)
};

struct ThirdOrderProblem {
  double alpha1 = 0.0;
  double beta1 = 0.0;
  double gamma1 = 0.0;
  RhsFunction rhs;
  ThirdOrderBoundary bc;

  OperatorCoefficients coefficients() const {
    return OperatorCoefficients::third(alpha1, beta1, gamma1);
  }
};

struct FifthOrderProblem {
  double alpha2 = 0.0;
  double beta2 = 0.0;
  double gamma2 = 0.0;
  double delta2 = 0.0;
  double mu2 = 0.0;
  RhsFunction rhs;
  FifthOrderBoundary bc;

  OperatorCoefficients coefficients() const {
    return OperatorCoefficients::fifth(alpha2, beta2, gamma2, delta2, mu2);
  }
};

/// p(x) = sum c_i x^i with V = u + p homogeneous; u = V - p.
struct LiftPolynomial {
  Order order = Order::third;
  Polynomial poly;

  double operator()(double x) const { return poly(x); }
  bool is_zero() const noexcept;
};

LiftPolynomial lift_third(const ThirdOrderBoundary& bc);
LiftPolynomial lift_fifth(const FifthOrderBoundary& bc);

struct BandSystem {
  Order order = Order::third;
  BandedMatrix matrix;
  std::vector<double> rhs;  // f*_k
  LiftPolynomial lift;

  std::size_t dimension() const noexcept { return rhs.size(); }
};

/// f_k = integral of w(x) f(x) R_k(x), with w = (1-x^2)(1+x), R = R^{(1,2)} for
/// order 3 and w = (1-x^2)^2(1+x), R = R^{(2,3)} for order 5; k = 0 .. dim-1.
/// Gauss-Jacobi rules start at max(N+8, 40) nodes and double until the
/// moments stop moving (ConvergenceError past 1280 nodes). Throws
/// std::domain_error if f is not finite at a node.
std::vector<double> rhs_moments(Order order, const RhsFunction& f, int N);

/// f*_k = f_k / h_k.
std::vector<double> rhs_projection(Order order, const RhsFunction& f, int N);
std::vector<double> rhs_projection_third(const RhsFunction& f, int N);
std::vector<double> rhs_projection_fifth(const RhsFunction& f, int N);

/// L p for the lift polynomial p: the extra forcing of the homogeneous problem.
Polynomial lift_forcing(const LiftPolynomial& lift, const OperatorCoefficients& coefficients);

/// base + projection of lift_forcing onto the test family (only k <= deg touched).
std::vector<double> modified_rhs(const LiftPolynomial& lift, std::span<const double> base,
                                 const OperatorCoefficients& coefficients);

/// Throws std::invalid_argument when N < 3 (third) or N < 5 (fifth).
BandSystem assemble_third(const ThirdOrderProblem& problem, int N);
BandSystem assemble_fifth(const FifthOrderProblem& problem, int N);

/// (L phi_j, psi_k) / h_k by unit-weight Gauss-Legendre quadrature with N+16
/// nodes: the (k, j) entry of the assembled operator.
double operator_entry_oracle(const OperatorCoefficients& coefficients, int j, int k, int N);

/// Every oracle entry, row-major (row k, column j), sharing one rule. With
/// include_leading = false the highest derivative is dropped, leaving
/// sum_i c_i M_i alone.
std::vector<double> oracle_matrix(const OperatorCoefficients& coefficients, int N,
                                  bool include_leading = true);

}  // namespace gjp
