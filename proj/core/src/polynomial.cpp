#include "gjp/polynomial.hpp"

#include <algorithm>

namespace gjp {

Polynomial Polynomial::endpoint_weight(int a, int b) {
  Polynomial w{1.0};
  const Polynomial one_minus{1.0, -1.0};
  const Polynomial one_plus{1.0, 1.0};
  for (int i = 0; i < a; ++i) w = w * one_minus;
  for (int i = 0; i < b; ++i) w = w * one_plus;
  return w;
}

double Polynomial::operator()(double x) const {
  double s = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + *it;
  return s;
}

Polynomial Polynomial::derivative(int q) const {
  std::vector<double> d(c_);
  for (int step = 0; step < q; ++step) {
    if (d.size() <= 1) return Polynomial{};
    for (std::size_t i = 1; i < d.size(); ++i) d[i - 1] = static_cast<double>(i) * d[i];
    d.pop_back();
  }
  return Polynomial(std::move(d));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), 0.0);
  for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] += other.c_[i];
  return *this;
}

Polynomial& Polynomial::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.c_.empty() || b.c_.empty()) return Polynomial{};
  std::vector<double> r(a.c_.size() + b.c_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(r));
}

}  // namespace gjp
