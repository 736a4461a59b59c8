#include "gjp/basis.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace gjp {

int GJPIndex::offset() const noexcept {
  if (ell <= -1 && m <= -1) return -(ell + m);
  if (ell <= -1) return -ell;
  if (m <= -1) return -m;
  return 0;
}

double eval_J(GJPIndex idx, int k, double x) {
  const int k0 = idx.offset();
  if (k < k0) {
    throw std::domain_error("eval_J: degree " + std::to_string(k) + " below offset " +
                            std::to_string(k0));
  }
  const int n = k - k0;
  const int a = idx.ell <= -1 ? -idx.ell : idx.ell;
  const int b = idx.m <= -1 ? -idx.m : idx.m;
  const Polynomial w = Polynomial::endpoint_weight(idx.ell <= -1 ? a : 0, idx.m <= -1 ? b : 0);
  return w(x) * eval_R(JacobiParams(a, b), n, x);
}

namespace {

struct FamilyShape {
  int jacobi_a;
  int jacobi_b;
  Polynomial weight;
};

const FamilyShape& shape(Order order, BasisKind kind) {
  // phi: (1-x)^2 (1+x) R^{(2,1)},   psi: (1-x)(1+x)^2 R^{(1,2)}
  // phi: (1-x)^3 (1+x)^2 R^{(3,2)}, psi: (1-x)^2 (1+x)^3 R^{(2,3)}
  static const std::array<FamilyShape, 4> shapes{{
      {2, 1, Polynomial::endpoint_weight(2, 1)},
      {1, 2, Polynomial::endpoint_weight(1, 2)},
      {3, 2, Polynomial::endpoint_weight(3, 2)},
      {2, 3, Polynomial::endpoint_weight(2, 3)},
  }};
  const std::size_t i = (order == Order::third ? 0 : 2) + (kind == BasisKind::trial ? 0 : 1);
  return shapes[i];
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double leibniz(Order order, BasisKind kind, int k, double x, int q) {
  if (k < 0) throw std::domain_error("basis index must be nonnegative");
  if (q < 0) throw std::domain_error("derivative order must be nonnegative");
  const FamilyShape& s = shape(order, kind);
  const JacobiParams p(s.jacobi_a, s.jacobi_b);
  double total = 0.0;
  for (int i = 0; i <= q && i <= s.weight.degree(); ++i) {
    const double dw = s.weight.derivative(i)(x);
    if (dw == 0.0) continue;
    total += binomial(q, i) * dw * eval_R_derivative(p, k, q - i, x);
  }
  return total;
}

}  // namespace

BasisFamily::BasisFamily(Order order, BasisKind kind, int truncation)
    : order_(order), kind_(kind), truncation_(truncation) {
  if (truncation < as_int(order)) {
    throw std::invalid_argument("truncation N=" + std::to_string(truncation) +
                                " too small for order " + std::to_string(as_int(order)));
  }
}

GJPIndex BasisFamily::index() const noexcept {
  if (order_ == Order::third) return kind_ == BasisKind::trial ? GJPIndex{-2, -1} : GJPIndex{-1, -2};
  return kind_ == BasisKind::trial ? GJPIndex{-3, -2} : GJPIndex{-2, -3};
}

JacobiParams BasisFamily::jacobi() const {
  const FamilyShape& s = shape(order_, kind_);
  return {static_cast<double>(s.jacobi_a), static_cast<double>(s.jacobi_b)};
}

const Polynomial& BasisFamily::weight() const noexcept { return shape(order_, kind_).weight; }

double BasisFamily::eval(int k, double x, int q) const { return leibniz(order_, kind_, k, x, q); }

double eval_phi(Order order, int k, double x, int q) {
  return leibniz(order, BasisKind::trial, k, x, q);
}

double eval_psi(Order order, int k, double x, int q) {
  return leibniz(order, BasisKind::test, k, x, q);
}

JacobiParams test_jacobi(Order order) {
  return order == Order::third ? JacobiParams(1, 2) : JacobiParams(2, 3);
}

JacobiParams trial_jacobi(Order order) {
  return order == Order::third ? JacobiParams(2, 1) : JacobiParams(3, 2);
}

double LegendreExpansion::operator()(double x) const {
  if (coefficients.empty()) return 0.0;
  std::vector<double> legendre(static_cast<std::size_t>(lowest_degree) + coefficients.size());
  eval_R_sequence(JacobiParams(0, 0), x, legendre);
  double s = 0.0;
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    s += coefficients[i] * legendre[static_cast<std::size_t>(lowest_degree) + i];
  return s;
}

LegendreExpansion legendre_expansion_J(GJPIndex idx, int k) {
  const double kk = k;
  const auto require = [&](int lo) {
    if (k < lo) {
      throw std::domain_error("legendre_expansion_J: k=" + std::to_string(k) +
                              " below minimum " + std::to_string(lo));
    }
  };
  LegendreExpansion e;
  if (idx == GJPIndex{-2, -1} || idx == GJPIndex{-1, -2}) {
    require(3);
    const double r = (2 * kk - 3) / (2 * kk - 1);
    e.lowest_degree = k - 3;
    if (idx.ell == -2) {
      const double f = 4.0 / ((kk - 1) * (2 * kk - 3));
      e.coefficients = {f, -f * r, -f, f * r};
    } else {
      const double f = 2.0 / (2 * kk - 3);
      e.coefficients = {f, f * r, -f, -f * r};
    }
    return e;
  }
  if (idx == GJPIndex{-3, -2} || idx == GJPIndex{-2, -3}) {
    require(5);
    const double a = 2 * kk - 7;
    const double b = 2 * kk - 5;
    const double c = 2 * kk - 3;
    const double d = 2 * kk - 1;
    e.lowest_degree = k - 5;
    if (idx.ell == -3) {
      const double f = 24.0 / (b * a * (kk - 2));
      e.coefficients = {f, -f * a / c, -f * 2 * b / c, f * 2 * a / d, f * a / c, -f * b * a / (d * c)};
    } else {
      const double f = 8.0 / (b * a);
      e.coefficients = {f, f * a / c, -f * 2 * b / c, -f * 2 * a / d, f * a / c, f * b * a / (d * c)};
    }
    return e;
  }
  throw std::invalid_argument("legendre_expansion_J: unsupported index pair (" +
                              std::to_string(idx.ell) + ", " + std::to_string(idx.m) + ")");
}

}  // namespace gjp
