#pragma once

#include <span>
#include <vector>

namespace gjp {

/// Index pair (alpha, beta) of a classical Jacobi family, alpha, beta > -1.
///
/// Polynomials in this library are normalized so that R_n(1) = 1, i.e.
/// R_n = P_n / P_n(1) where P_n is the textbook Jacobi polynomial. The weight
/// is (1-x)^alpha (1+x)^beta on (-1, 1).
class JacobiParams {
 public:
  /// Throws std::domain_error unless alpha > -1 and beta > -1.
  JacobiParams(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double lambda() const noexcept { return alpha_ + beta_ + 1.0; }

  /// The family (alpha + q, beta + q) holding the q-th derivatives.
  JacobiParams shifted(int q) const { return {alpha_ + q, beta_ + q}; }

  friend bool operator==(const JacobiParams&, const JacobiParams&) = default;

 private:
  double alpha_;
  double beta_;
};

/// Rising factorial a (a+1) ... (a+k-1); 1 for k == 0.
double pochhammer(double a, int k);

/// R_n^{(alpha,beta)}(x) by the three-term recurrence.
double eval_R(const JacobiParams& params, int n, double x);

/// Fills out[i] = R_i(x) for i = 0 .. out.size()-1.
void eval_R_sequence(const JacobiParams& params, double x, std::span<double> out);

/// D^q R_n(x) = (n-q+1)_q (n+lambda)_q / (2^q (alpha+1)_q) R_{n-q}^{(alpha+q,beta+q)}(x).
/// Zero when q > n.
double eval_R_derivative(const JacobiParams& params, int n, int q, double x);

/// Leading coefficient of R_n in the monomial basis.
double leading_coefficient(const JacobiParams& params, int n);

/// h_n = integral of (1-x)^alpha (1+x)^beta R_n(x)^2 over (-1, 1).
double norm_h(const JacobiParams& params, int n);

}  // namespace gjp
