#include "gjp/cli/examples.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gjp::cli {

ExampleFamily ExampleFamily::first(int j, double m) {
  if (j < 0) throw std::invalid_argument("example 1 needs j >= 0, got " + std::to_string(j));
  std::vector<double> xj(static_cast<std::size_t>(j) + 1, 0.0);
  xj.back() = 1.0;
  return {1, Order::third, Polynomial{1.0, 0.0, -1.0} * Polynomial(std::move(xj)), Kind::sine,
          m * std::numbers::pi};
}

ExampleFamily ExampleFamily::second(double m) {
  return {2, Order::fifth, Polynomial::endpoint_weight(3, 2), Kind::cosh, m};
}

ExampleFamily ExampleFamily::third(double m) {
  return {3, Order::third, Polynomial{1.0}, Kind::sinh, m};
}

ExampleFamily ExampleFamily::make(int id, int j, double m) {
  switch (id) {
    case 1: return first(j, m);
    case 2: return second(m);
    case 3: return third(m);
    default: throw std::invalid_argument("unknown example " + std::to_string(id) + " (use 1, 2 or 3)");
  }
}

double ExampleFamily::g(double x, int q) const {
  const double s = std::pow(w_, q);
  switch (kind_) {
    case Kind::sine: {
      // q-th derivative of sin is sin, cos, -sin, -cos in turn.
      const double t = w_ * x;
      switch (q % 4) {
        case 0: return s * std::sin(t);
        case 1: return s * std::cos(t);
        case 2: return -s * std::sin(t);
        default: return -s * std::cos(t);
      }
    }
    case Kind::cosh: return s * (q % 2 == 0 ? std::cosh(w_ * x) : std::sinh(w_ * x));
    case Kind::sinh: return s * (q % 2 == 0 ? std::sinh(w_ * x) : std::cosh(w_ * x));
  }
  return 0.0;
}

double ExampleFamily::derivative(double x, int q) const {
  double total = 0.0;
  double binom = 1.0;
  for (int i = 0; i <= q; ++i) {
    if (i > 0) binom = binom * (q - i + 1) / i;
    if (i > poly_.degree()) break;
    total += binom * poly_.derivative(i)(x) * g(x, q - i);
  }
  return total;
}

RhsFunction ExampleFamily::rhs(const OperatorCoefficients& coefficients) const {
  if (coefficients.order() != order_) {
    throw std::invalid_argument("example " + std::to_string(id_) + " is order " +
                                std::to_string(as_int(order_)));
  }
  const auto w = coefficients.derivative_weights();
  return [self = *this, w](double x) {
    double f = 0.0;
    for (int q = 0; q < 6; ++q)
      if (w[static_cast<std::size_t>(q)] != 0.0) f += w[static_cast<std::size_t>(q)] * self.derivative(x, q);
    return f;
  };
}

ThirdOrderBoundary ExampleFamily::third_boundary() const {
  // Examples 1 and 2 vanish with the required derivatives by construction;
  // evaluating sin(m pi) would only add rounding noise.
  if (id_ != 3) return {};
  return {exact(-1.0), exact(1.0), derivative(1.0, 1)};
}

FifthOrderBoundary ExampleFamily::fifth_boundary() const {
  if (id_ != 3) return {};
  return {exact(-1.0), exact(1.0), derivative(-1.0, 1), derivative(1.0, 1), derivative(1.0, 2)};
}

ExampleRun solve_example(const ExampleFamily& example, const OperatorCoefficients& c, int N) {
  ExampleRun run;
  const RhsFunction f = example.rhs(c);
  if (example.order() == Order::third) {
    const auto v = c.values();
    run.report = solve_third(ThirdOrderProblem{v[0], v[1], v[2], f, example.third_boundary()}, N);
  } else {
    const auto v = c.values();
    run.report = solve_fifth(
        FifthOrderProblem{v[0], v[1], v[2], v[3], v[4], f, example.fifth_boundary()}, N);
  }
  run.error = max_pointwise_error(run.report.solution,
                                  [&](double x) { return example.exact(x); });
  return run;
}

}  // namespace gjp::cli
