#pragma once

#include <initializer_list>
#include <span>
#include <vector>

namespace gjp {

/// Real polynomial in the monomial basis, coefficient i multiplying x^i.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<double> coefficients) : c_(coefficients) {}
  explicit Polynomial(std::vector<double> coefficients) : c_(std::move(coefficients)) {}

  /// (1-x)^a (1+x)^b
  static Polynomial endpoint_weight(int a, int b);

  std::span<const double> coefficients() const noexcept { return c_; }
  double coefficient(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0.0; }
  /// Degree of the highest stored coefficient; -1 for the empty polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }

  double operator()(double x) const;
  Polynomial derivative(int q = 1) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator*=(double s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(Polynomial a, double s) { return a *= s; }
  friend Polynomial operator*(double s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

 private:
  std::vector<double> c_;
};

}  // namespace gjp
