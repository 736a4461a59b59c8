#include "gjp/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "gjp/errors.hpp"
#include "gjp/jacobi.hpp"
#include "gjp/quadrature.hpp"

namespace gjp {

// ---- OperatorCoefficients ----------------------------------------------------

OperatorCoefficients OperatorCoefficients::third(double alpha1, double beta1, double gamma1) {
  return {Order::third, {alpha1, beta1, gamma1, 0.0, 0.0}};
}

OperatorCoefficients OperatorCoefficients::fifth(double alpha2, double beta2, double gamma2,
                                                 double delta2, double mu2) {
  return {Order::fifth, {alpha2, beta2, gamma2, delta2, mu2}};
}

OperatorCoefficients OperatorCoefficients::zero(Order order) {
  return {order, {0.0, 0.0, 0.0, 0.0, 0.0}};
}

OperatorCoefficients OperatorCoefficients::ones(Order order) {
  return order == Order::third ? third(1, 1, 1) : fifth(1, 1, 1, 1, 1);
}

OperatorCoefficients OperatorCoefficients::from_values(Order order,
                                                       std::span<const double> values) {
  const std::size_t want = order == Order::third ? 3 : 5;
  if (values.size() != want) {
    throw std::invalid_argument("expected " + std::to_string(want) +
                                " operator coefficients, got " + std::to_string(values.size()));
  }
  std::array<double, 5> v{};
  std::copy(values.begin(), values.end(), v.begin());
  return {order, v};
}

bool OperatorCoefficients::all_zero() const noexcept {
  const auto v = values();
  return std::all_of(v.begin(), v.end(), [](double c) { return c == 0.0; });
}

std::array<double, 6> OperatorCoefficients::derivative_weights() const noexcept {
  const auto& c = values_;
  if (order_ == Order::third) {
    // D^3 - a1 D^2 - b1 D + g1
    return {c[2], -c[1], -c[0], 1.0, 0.0, 0.0};
  }
  // -D^5 + a2 D^4 + b2 D^3 - g2 D^2 - d2 D + m2
  return {c[4], -c[3], -c[2], c[1], c[0], -1.0};
}

// ---- band assembly -----------------------------------------------------------

namespace {

int checked_dimension(Order order, int N) {
  if (N < as_int(order)) {
    throw std::invalid_argument("truncation N=" + std::to_string(N) + " too small for order " +
                                std::to_string(as_int(order)) + " (need N >= " +
                                std::to_string(as_int(order)) + ")");
  }
  return N - dimension_deficit(order);
}

}  // namespace

std::size_t operator_bandwidth(const OperatorCoefficients& coefficients, EntryTable table) {
  if (table.empty()) table = default_entries(coefficients.order());
  const auto c = coefficients.values();
  std::size_t bw = 0;
  for (const EntryFormula& e : table) {
    if (c[static_cast<std::size_t>(e.matrix)] != 0.0)
      bw = std::max(bw, static_cast<std::size_t>(std::abs(e.offset)));
  }
  return bw;
}

BandedMatrix assemble_operator(const OperatorCoefficients& coefficients, int N, EntryTable table) {
  const Order order = coefficients.order();
  const int dim = checked_dimension(order, N);
  if (table.empty()) table = default_entries(order);
  const std::size_t n = static_cast<std::size_t>(dim);
  const std::size_t bw = std::min(operator_bandwidth(coefficients, table), n - 1);
  BandedMatrix m(n, bw, bw);
  const auto c = coefficients.values();
  for (int k = 0; k < dim; ++k) {
    const std::size_t kk = static_cast<std::size_t>(k);
    m.add(kk, kk, leading_diagonal(order, k));
    for (const EntryFormula& e : table) {
      const double ce = c[static_cast<std::size_t>(e.matrix)];
      if (ce == 0.0) continue;
      const std::size_t d = static_cast<std::size_t>(std::abs(e.offset));
      const std::size_t row = e.offset >= 0 ? kk : kk + d;
      const std::size_t col = e.offset >= 0 ? kk + d : kk;
      if (row >= n || col >= n) continue;
      m.add(row, col, ce * e.value(k));
    }
  }
  return m;
}

// ---- lifts ---------------------------------------------------------------------

bool LiftPolynomial::is_zero() const noexcept {
  const auto c = poly.coefficients();
  return std::all_of(c.begin(), c.end(), [](double v) { return v == 0.0; });
}

LiftPolynomial lift_third(const ThirdOrderBoundary& bc) {
  const double am = bc.a_minus, ap = bc.a_plus, a1 = bc.a1_plus;
  return {Order::third,
          Polynomial{(-am - 3 * ap + 2 * a1) / 4, (am - ap) / 2, (-am + ap - 2 * a1) / 4}};
}

LiftPolynomial lift_fifth(const FifthOrderBoundary& bc) {
  const double am = bc.a_minus, ap = bc.a_plus;
  const double b = bc.a1_minus, c = bc.a1_plus, d = bc.a2_plus;
  return {Order::fifth, Polynomial{
                            (-5 * am - 11 * ap - 2 * b + 8 * c - 2 * d) / 16,
                            4 * (3 * am - 3 * ap + b + c) / 16,
                            -2 * (3 * am - 3 * ap + 6 * c - 2 * d) / 16,
                            -4 * (am - ap + b + c) / 16,
                            (3 * am - 3 * ap + 2 * b + 4 * c - 2 * d) / 16,
                        }};
}

// ---- right-hand side -------------------------------------------------------------

std::vector<double> rhs_moments(Order order, const RhsFunction& f, int N) {
  const std::size_t dim = static_cast<std::size_t>(checked_dimension(order, N));
  if (!f) return std::vector<double>(dim, 0.0);

  const JacobiParams params = test_jacobi(order);
  constexpr int kMaxCount = 1280;
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  std::vector<double> r(dim);
  std::vector<double> prev;
  double last_change = std::numeric_limits<double>::infinity();
  for (int count = std::max(N + 8, 40); count <= kMaxCount; count *= 2) {
    const QuadratureRule rule = gauss_jacobi_rule(params, count);
    std::vector<double> mom(dim, 0.0);
    std::vector<double> mag(dim, 0.0);
    for (std::size_t i = 0; i < rule.count(); ++i) {
      const double x = rule.nodes()[i];
      const double fx = f(x);
      if (!std::isfinite(fx)) {
        throw std::domain_error("right-hand side is not finite at x = " + std::to_string(x));
      }
      eval_R_sequence(params, x, r);
      const double wf = rule.weights()[i] * fx;
      for (std::size_t k = 0; k < dim; ++k) {
        const double t = wf * r[k];
        mom[k] += t;
        mag[k] += std::abs(t);
      }
    }
    if (!prev.empty()) {
      // Relative to the moments, but never finer than those of f = 1: a
      // right-hand side that cancels to rounding noise has no stable digits.
      double scale = norm_h(params, 0);
      for (double v : mom) scale = std::max(scale, std::abs(v));
      bool stable = true;
      double change = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        const double d = std::abs(mom[k] - prev[k]);
        change = std::max(change, d / scale);
        stable = stable && d <= 1e-13 * scale + 256 * kEps * mag[k];
      }
      // Rounding inside f itself is invisible to mag; once the change stops
      // shrinking at a small level the rule has hit that floor.
      if (stable || (change <= 1e-11 && change >= 0.5 * last_change)) return mom;
      last_change = change;
    }
    prev = std::move(mom);
  }
  throw ConvergenceError("rhs projection did not stabilize with " + std::to_string(kMaxCount) +
                         " quadrature nodes");
}

std::vector<double> rhs_projection(Order order, const RhsFunction& f, int N) {
  std::vector<double> m = rhs_moments(order, f, N);
  const JacobiParams params = test_jacobi(order);
  for (std::size_t k = 0; k < m.size(); ++k) m[k] /= norm_h(params, static_cast<int>(k));
  return m;
}

std::vector<double> rhs_projection_third(const RhsFunction& f, int N) {
  return rhs_projection(Order::third, f, N);
}

std::vector<double> rhs_projection_fifth(const RhsFunction& f, int N) {
  return rhs_projection(Order::fifth, f, N);
}

Polynomial lift_forcing(const LiftPolynomial& lift, const OperatorCoefficients& coefficients) {
  const auto w = coefficients.derivative_weights();
  Polynomial out;
  for (int q = 0; q < 6; ++q) {
    if (w[static_cast<std::size_t>(q)] != 0.0)
      out += w[static_cast<std::size_t>(q)] * lift.poly.derivative(q);
  }
  return out;
}

std::vector<double> modified_rhs(const LiftPolynomial& lift, std::span<const double> base,
                                 const OperatorCoefficients& coefficients) {
  std::vector<double> out(base.begin(), base.end());
  const Polynomial g = lift_forcing(lift, coefficients);
  const auto gc = g.coefficients();
  if (std::all_of(gc.begin(), gc.end(), [](double v) { return v == 0.0; })) return out;

  const JacobiParams params = test_jacobi(coefficients.order());
  const int top = std::min(g.degree(), static_cast<int>(out.size()) - 1);
  if (top < 0) return out;
  const QuadratureRule rule = gauss_jacobi_rule(params, g.degree() / 2 + top / 2 + 2);
  std::vector<double> r(static_cast<std::size_t>(top) + 1);
  std::vector<double> acc(r.size(), 0.0);
  for (std::size_t i = 0; i < rule.count(); ++i) {
    const double x = rule.nodes()[i];
    eval_R_sequence(params, x, r);
    const double wg = rule.weights()[i] * g(x);
    for (std::size_t k = 0; k < r.size(); ++k) acc[k] += wg * r[k];
  }
  for (std::size_t k = 0; k < acc.size(); ++k)
    out[k] += acc[k] / norm_h(params, static_cast<int>(k));
  return out;
}

// ---- systems -----------------------------------------------------------------------

namespace {

BandSystem build(Order order, const OperatorCoefficients& c, const RhsFunction& f,
                 LiftPolynomial lift, int N) {
  checked_dimension(order, N);
  BandSystem s{order, assemble_operator(c, N), rhs_projection(order, f, N), std::move(lift)};
  if (!s.lift.is_zero()) s.rhs = modified_rhs(s.lift, s.rhs, c);
  return s;
}

}  // namespace

BandSystem assemble_third(const ThirdOrderProblem& problem, int N) {
  return build(Order::third, problem.coefficients(), problem.rhs, lift_third(problem.bc), N);
}

BandSystem assemble_fifth(const FifthOrderProblem& problem, int N) {
  return build(Order::fifth, problem.coefficients(), problem.rhs, lift_fifth(problem.bc), N);
}

// ---- oracle --------------------------------------------------------------------------

namespace {

// The oracle runs in extended precision with its own recurrence: the D^q phi_j
// terms are large and cancel by orthogonality, and h_k is small, so working
// in double leaves ~1e-9 noise on entries of size 1e-4.
#if defined(__SIZEOF_FLOAT128__) && !defined(__clang__)
using Real = __float128;
#else
using Real = long double;
#endif

struct Family {
  int a;
  int b;
  Polynomial weight;
};

Family trial_family(Order o) {
  return o == Order::third ? Family{2, 1, Polynomial::endpoint_weight(2, 1)}
                           : Family{3, 2, Polynomial::endpoint_weight(3, 2)};
}

Family test_family(Order o) {
  return o == Order::third ? Family{1, 2, Polynomial::endpoint_weight(1, 2)}
                           : Family{2, 3, Polynomial::endpoint_weight(2, 3)};
}

Real horner(const Polynomial& p, Real x) {
  const auto c = p.coefficients();
  Real s = 0;
  for (std::size_t i = c.size(); i-- > 0;) s = s * x + static_cast<Real>(c[i]);
  return s;
}

Real jacobi_R(Real a, Real b, int n, Real x) {
  if (n == 0) return 1;
  const Real lam = a + b + 1;
  Real r0 = 1;
  Real r1 = (a - b + (lam + 1) * x) / (2 * (a + 1));
  for (int k = 1; k < n; ++k) {
    const Real m = 2 * k + lam - 1;
    const Real r2 = ((m * (m + 1) * (m + 2) * x + (a * a - b * b) * (m + 1)) * r1 -
                     2 * k * (k + b) * (m + 2) * r0) /
                    (2 * (k + lam) * (k + a + 1) * m);
    r0 = r1;
    r1 = r2;
  }
  return r1;
}

Real jacobi_D(Real a, Real b, int n, int q, Real x) {
  if (q > n) return 0;
  const Real lam = a + b + 1;
  Real scale = 1;
  for (int i = 0; i < q; ++i) scale *= (n - q + 1 + i) * (n + lam + i) / (2 * (a + 1 + i));
  return scale * jacobi_R(a + q, b + q, n - q, x);
}

Real basis_D(const Family& f, int k, int q, Real x) {
  Real total = 0;
  Real binom = 1;
  for (int i = 0; i <= q && i <= f.weight.degree(); ++i) {
    if (i > 0) binom = binom * (q - i + 1) / i;
    total += binom * horner(f.weight.derivative(i), x) * jacobi_D(f.a, f.b, k, q - i, x);
  }
  return total;
}

Real norm_h_exact(int a, int b, int n) {
  // h_0 = 2^lambda a! b! / (lambda)!, then the ratio h_i / h_{i-1}.
  const int lam = a + b + 1;
  Real h = 1;
  for (int i = 0; i < lam; ++i) h *= 2;
  for (int i = 2; i <= a; ++i) h *= i;
  for (int i = 2; i <= b; ++i) h *= i;
  for (int i = 2; i <= lam; ++i) h /= i;
  for (int i = 1; i <= n; ++i)
    h = h * i * (i + b) * (2 * i + lam - 2) / (Real(2 * i + lam) * (i + lam - 1) * (i + a));
  return h;
}

class Oracle {
 public:
  Oracle(const OperatorCoefficients& c, int N, bool include_leading = true)
      : order_(c.order()),
        dim_(checked_dimension(c.order(), N)),
        trial_(trial_family(c.order())),
        test_(test_family(c.order())) {
    const auto w = c.derivative_weights();
    for (std::size_t q = 0; q < w.size(); ++q) weights_[q] = w[q];
    if (!include_leading) weights_[static_cast<std::size_t>(as_int(order_))] = 0;
    // Gauss-Legendre nodes from the double rule, polished by Newton steps on
    // the Legendre recurrence.
    const int n = N + 16;
    const QuadratureRule seed = gauss_jacobi_rule(JacobiParams(0, 0), n);
    for (double x0 : seed.nodes()) {
      Real x = x0;
      Real dp = 1;
      for (int it = 0; it < 4; ++it) {
        Real p0 = 1, p1 = x;
        for (int k = 1; k < n; ++k) {
          const Real p2 = ((2 * k + 1) * x * p1 - k * p0) / (k + 1);
          p0 = p1;
          p1 = p2;
        }
        dp = n * (p0 - x * p1) / (1 - x * x);
        x -= p1 / dp;
      }
      nodes_.push_back(x);
      gauss_weights_.push_back(2 / ((1 - x * x) * dp * dp));
    }
  }

  int dimension() const noexcept { return dim_; }

  std::vector<Real> trial_image(int j) const {
    std::vector<Real> v(nodes_.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (int q = 0; q <= as_int(order_); ++q) {
        const Real w = weights_[static_cast<std::size_t>(q)];
        if (w != 0) v[i] += w * basis_D(trial_, j, q, nodes_[i]);
      }
    }
    return v;
  }

  std::vector<Real> test_values(int k) const {
    std::vector<Real> v(nodes_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = gauss_weights_[i] * basis_D(test_, k, 0, nodes_[i]);
    return v;
  }

  double pair(const std::vector<Real>& lphi, const std::vector<Real>& wpsi, int k) const {
    Real s = 0;
    for (std::size_t i = 0; i < lphi.size(); ++i) s += lphi[i] * wpsi[i];
    return static_cast<double>(s / norm_h_exact(test_.a, test_.b, k));
  }

 private:
  Order order_;
  int dim_;
  Family trial_;
  Family test_;
  std::array<Real, 6> weights_{};
  std::vector<Real> nodes_;
  std::vector<Real> gauss_weights_;
};

}  // namespace

double operator_entry_oracle(const OperatorCoefficients& coefficients, int j, int k, int N) {
  const Oracle o(coefficients, N);
  if (j < 0 || k < 0 || j >= o.dimension() || k >= o.dimension()) {
    throw std::out_of_range("operator_entry_oracle: (" + std::to_string(k) + ", " +
                            std::to_string(j) + ") outside dimension " +
                            std::to_string(o.dimension()));
  }
  return o.pair(o.trial_image(j), o.test_values(k), k);
}

std::vector<double> oracle_matrix(const OperatorCoefficients& coefficients, int N,
                                  bool include_leading) {
  const Oracle o(coefficients, N, include_leading);
  const int n = o.dimension();
  std::vector<std::vector<Real>> lphi;
  std::vector<std::vector<Real>> wpsi;
  for (int i = 0; i < n; ++i) {
    lphi.push_back(o.trial_image(i));
    wpsi.push_back(o.test_values(i));
  }
  std::vector<double> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      m[static_cast<std::size_t>(k * n + j)] = o.pair(lphi[static_cast<std::size_t>(j)],
                                                      wpsi[static_cast<std::size_t>(k)], k);
  return m;
}

}  // namespace gjp
