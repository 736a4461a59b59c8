#include "gjp/jacobi.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gjp {

JacobiParams::JacobiParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw std::domain_error("Jacobi indexes must satisfy alpha, beta > -1 (got " +
                            std::to_string(alpha) + ", " + std::to_string(beta) + ")");
  }
}

double pochhammer(double a, int k) {
  if (k < 0) throw std::domain_error("pochhammer: negative length");
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= a + i;
  return r;
}

namespace {

// One step of the recurrence: returns R_{n+1} from R_n and R_{n-1}, n >= 1.
inline double recurrence_step(double a, double b, double lam, int n, double x, double rn,
                              double rnm1) {
  const double s = 2.0 * n + lam;
  const double lhs = 2.0 * (n + lam) * (n + a + 1.0) * (s - 1.0);
  const double c1 = (s - 1.0) * s * (s + 1.0) * x + (a * a - b * b) * s;
  const double c0 = 2.0 * n * (n + b) * (s + 1.0);
  return (c1 * rn - c0 * rnm1) / lhs;
}

inline double first_degree(double a, double b, double lam, double x) {
  return (a - b + (lam + 1.0) * x) / (2.0 * (a + 1.0));
}

}  // namespace

double eval_R(const JacobiParams& params, int n, double x) {
  if (n < 0) throw std::domain_error("eval_R: negative degree");
  if (n == 0) return 1.0;
  const double a = params.alpha();
  const double b = params.beta();
  const double lam = params.lambda();
  double rm1 = 1.0;
  double r = first_degree(a, b, lam, x);
  for (int k = 1; k < n; ++k) {
    const double next = recurrence_step(a, b, lam, k, x, r, rm1);
    rm1 = r;
    r = next;
  }
  return r;
}

void eval_R_sequence(const JacobiParams& params, double x, std::span<double> out) {
  if (out.empty()) return;
  out[0] = 1.0;
  if (out.size() == 1) return;
  const double a = params.alpha();
  const double b = params.beta();
  const double lam = params.lambda();
  out[1] = first_degree(a, b, lam, x);
  for (std::size_t k = 1; k + 1 < out.size(); ++k) {
    out[k + 1] = recurrence_step(a, b, lam, static_cast<int>(k), x, out[k], out[k - 1]);
  }
}

double eval_R_derivative(const JacobiParams& params, int n, int q, double x) {
  if (n < 0 || q < 0) throw std::domain_error("eval_R_derivative: negative index");
  if (q > n) return 0.0;
  if (q == 0) return eval_R(params, n, x);
  const double lam = params.lambda();
  const double scale = pochhammer(n - q + 1.0, q) * pochhammer(n + lam, q) /
                       (std::ldexp(1.0, q) * pochhammer(params.alpha() + 1.0, q));
  return scale * eval_R(params.shifted(q), n - q, x);
}

double leading_coefficient(const JacobiParams& params, int n) {
  if (n < 0) throw std::domain_error("leading_coefficient: negative degree");
  // n-th derivative of R_n divided by n!.
  const double lam = params.lambda();
  double c = 1.0;
  for (int i = 0; i < n; ++i) c *= (n + lam + i) / (2.0 * (params.alpha() + 1.0 + i));
  return c;
}

double norm_h(const JacobiParams& params, int n) {
  if (n < 0) throw std::domain_error("norm_h: negative degree");
  const double a = params.alpha();
  const double b = params.beta();
  const double lam = params.lambda();
  const double scale = std::pow(2.0, lam) * std::tgamma(a + 1.0) / std::tgamma(lam + 1.0);
  if (n == 0) return scale * std::tgamma(b + 1.0);
  // n! Gamma(n+b+1) / (Gamma(n+lambda) Gamma(n+a+1)) grows from its n = 1 value by
  // i (i+b) / ((i+lambda-1)(i+a)); the product form never overflows.
  double h = scale * std::tgamma(b + 2.0) / (a + 1.0);
  for (int i = 2; i <= n; ++i) h *= i * (i + b) / ((i + lam - 1.0) * (i + a));
  return h / (2.0 * n + lam);
}

}  // namespace gjp
