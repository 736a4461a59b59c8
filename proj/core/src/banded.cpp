#include "gjp/banded.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gjp/errors.hpp"

namespace gjp {

BandedMatrix::BandedMatrix(std::size_t n, std::size_t lower, std::size_t upper)
    : n_(n), p_(lower), q_(upper), data_(n * (lower + upper + 1), 0.0) {
  if (n > 0 && (lower >= n || upper >= n)) {
    throw std::invalid_argument("BandedMatrix: bandwidths must be smaller than the dimension");
  }
}

void BandedMatrix::set(std::size_t i, std::size_t j, double v) {
  if (!in_band(i, j)) {
    throw std::out_of_range("BandedMatrix::set: (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") outside the band");
  }
  ref(i, j) = v;
}

void BandedMatrix::add(std::size_t i, std::size_t j, double v) {
  if (!in_band(i, j)) {
    throw std::out_of_range("BandedMatrix::add: (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") outside the band");
  }
  ref(i, j) += v;
}

std::vector<double> BandedMatrix::multiply(std::span<const double> x) const {
  if (x.size() != n_) throw std::invalid_argument("BandedMatrix::multiply: length mismatch");
  std::vector<double> y(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    const std::size_t j0 = i >= p_ ? i - p_ : 0;
    const std::size_t j1 = std::min(n_ - 1, i + q_);
    double s = 0.0;
    for (std::size_t j = j0; j <= j1; ++j) s += data_[slot(i, j)] * x[j];
    y[i] = s;
  }
  return y;
}

std::vector<double> BandedMatrix::multiply_transposed(std::span<const double> x) const {
  if (x.size() != n_) throw std::invalid_argument("BandedMatrix::multiply_transposed: length mismatch");
  std::vector<double> y(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    const std::size_t j0 = i >= p_ ? i - p_ : 0;
    const std::size_t j1 = std::min(n_ - 1, i + q_);
    for (std::size_t j = j0; j <= j1; ++j) y[j] += data_[slot(i, j)] * x[i];
  }
  return y;
}

double BandedLu::l(std::size_t i, std::size_t j) const noexcept {
  if (i == j) return i < lu_.size() ? 1.0 : 0.0;
  return j < i ? lu_.get(i, j) : 0.0;
}

double BandedLu::u(std::size_t i, std::size_t j) const noexcept {
  return j >= i ? lu_.get(i, j) : 0.0;
}

BandedLu lu_factor_banded(const BandedMatrix& m) {
  BandedLu f(m);
  BandedMatrix& a = f.lu_;
  const std::size_t n = a.size();
  const std::size_t p = a.lower();
  const std::size_t q = a.upper();
  OpCount& ops = f.ops_;
  for (std::size_t k = 0; k < n; ++k) {
    const double pivot = a.ref(k, k);
    if (!(std::abs(pivot) >= 1e-300)) throw SingularPivotError(k, pivot);
    const std::size_t i_end = std::min(n - 1, k + p);
    const std::size_t j_end = std::min(n - 1, k + q);
    for (std::size_t i = k + 1; i <= i_end; ++i) {
      const double l = a.ref(i, k) / pivot;
      ++ops.divisions;
      a.ref(i, k) = l;
      for (std::size_t j = k + 1; j <= j_end; ++j) {
        a.ref(i, j) -= l * a.ref(k, j);
        ++ops.multiplications;
        ++ops.subtractions;
      }
    }
  }
  return f;
}

SolveResult BandedLu::solve(std::span<const double> b) const {
  const std::size_t n = lu_.size();
  if (b.size() != n) {
    throw std::invalid_argument("solve_banded: rhs length " + std::to_string(b.size()) +
                                " does not match dimension " + std::to_string(n));
  }
  const std::size_t p = lu_.lower();
  const std::size_t q = lu_.upper();
  SolveResult r{std::vector<double>(b.begin(), b.end()), {}};
  std::vector<double>& x = r.x;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j0 = i >= p ? i - p : 0;
    for (std::size_t j = j0; j < i; ++j) {
      x[i] -= lu_.get(i, j) * x[j];
      ++r.ops.multiplications;
      ++r.ops.subtractions;
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    const std::size_t j1 = std::min(n - 1, i + q);
    for (std::size_t j = i + 1; j <= j1; ++j) {
      x[i] -= lu_.get(i, j) * x[j];
      ++r.ops.multiplications;
      ++r.ops.subtractions;
    }
    x[i] /= lu_.get(i, i);
    ++r.ops.divisions;
  }
  return r;
}

SolveResult BandedLu::solve_transposed(std::span<const double> b) const {
  const std::size_t n = lu_.size();
  if (b.size() != n) throw std::invalid_argument("solve_transposed: length mismatch");
  const std::size_t p = lu_.lower();
  const std::size_t q = lu_.upper();
  SolveResult r{std::vector<double>(b.begin(), b.end()), {}};
  std::vector<double>& x = r.x;
  // U^T y = b (lower triangular, bandwidth q)
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j0 = i >= q ? i - q : 0;
    for (std::size_t j = j0; j < i; ++j) {
      x[i] -= lu_.get(j, i) * x[j];
      ++r.ops.multiplications;
      ++r.ops.subtractions;
    }
    x[i] /= lu_.get(i, i);
    ++r.ops.divisions;
  }
  // L^T x = y (unit upper triangular, bandwidth p)
  for (std::size_t i = n; i-- > 0;) {
    const std::size_t j1 = std::min(n - 1, i + p);
    for (std::size_t j = i + 1; j <= j1; ++j) {
      x[i] -= lu_.get(j, i) * x[j];
      ++r.ops.multiplications;
      ++r.ops.subtractions;
    }
  }
  return r;
}

SolveResult solve_banded(const BandedLu& factors, std::span<const double> rhs) {
  return factors.solve(rhs);
}

std::vector<double> solve_diagonal_third(std::span<const double> fstar) {
  std::vector<double> a(fstar.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double kk = static_cast<double>(k);
    a[k] = fstar[k] / (2.0 * (kk + 1) * (kk + 3));
  }
  return a;
}

std::vector<double> solve_diagonal_third_moments(std::span<const double> moments) {
  std::vector<double> a(moments.size());
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = (static_cast<double>(k) + 2.0) / 16.0 * moments[k];
  return a;
}

std::vector<double> solve_diagonal_fifth(std::span<const double> fstar) {
  std::vector<double> a(fstar.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double kk = static_cast<double>(k);
    a[k] = fstar[k] / (3.0 * (kk + 1) * (kk + 2) * (kk + 4) * (kk + 5));
  }
  return a;
}

std::vector<double> solve_diagonal_fifth_moments(std::span<const double> moments) {
  std::vector<double> a(moments.size());
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = (static_cast<double>(k) + 3.0) / 384.0 * moments[k];
  return a;
}

}  // namespace gjp
