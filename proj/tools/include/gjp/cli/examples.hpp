#pragma once

#include "gjp/analysis.hpp"
#include "gjp/assembly.hpp"
#include "gjp/polynomial.hpp"

namespace gjp::cli {

/// Manufactured solutions u = P(x) g(x) with P a polynomial and g one of
/// sin(w x), cosh(w x), sinh(w x); derivatives by the Leibniz rule.
class ExampleFamily {
 public:
  /// (1-x^2) x^j sin(m pi x), third order, homogeneous data.
  static ExampleFamily first(int j, double m);
  /// (1-x^2)^2 (1-x) cosh(m x), fifth order, homogeneous data.
  static ExampleFamily second(double m);
  /// sinh(m x), third order, u(-1) = -sinh m, u(1) = sinh m, u'(1) = m cosh m.
  static ExampleFamily third(double m);
  /// Throws std::invalid_argument for an unknown id or j < 0.
  static ExampleFamily make(int id, int j, double m);

  int id() const noexcept { return id_; }
  Order order() const noexcept { return order_; }

  double exact(double x) const { return derivative(x, 0); }
  double derivative(double x, int q) const;

  /// f = L u for the given operator coefficients.
  RhsFunction rhs(const OperatorCoefficients& coefficients) const;

  ThirdOrderBoundary third_boundary() const;
  FifthOrderBoundary fifth_boundary() const;

 private:
  enum class Kind { sine, cosh, sinh };
  ExampleFamily(int id, Order order, Polynomial p, Kind kind, double w)
      : id_(id), order_(order), poly_(std::move(p)), kind_(kind), w_(w) {}

  double g(double x, int q) const;

  int id_;
  Order order_;
  Polynomial poly_;
  Kind kind_;
  double w_;
};

struct ExampleRun {
  double error = 0.0;
  SolveReport report;
};

/// Assembles, solves and measures the max error on the 1001-point grid.
ExampleRun solve_example(const ExampleFamily& example, const OperatorCoefficients& coefficients,
                         int N);

}  // namespace gjp::cli
