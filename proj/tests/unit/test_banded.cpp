#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "gjp/banded.hpp"
#include "gjp/errors.hpp"

using gjp::BandedMatrix;

namespace {

using Dense = std::vector<std::vector<double>>;

// Diagonally dominant band matrix with random entries.
BandedMatrix random_band(std::size_t n, std::size_t p, std::size_t q, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  BandedMatrix m(n, p, q);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = (i > p ? i - p : 0); j <= std::min(n - 1, i + q); ++j)
      m.set(i, j, i == j ? 4.0 + static_cast<double>(p + q) + u(rng) : u(rng));
  return m;
}

Dense to_dense(const BandedMatrix& m) {
  Dense d(m.size(), std::vector<double>(m.size(), 0.0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) d[i][j] = m.get(i, j);
  return d;
}

// Dense Gaussian elimination with partial pivoting.
std::vector<double> dense_solve(Dense a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
    std::swap(a[k], a[piv]);
    std::swap(b[k], b[piv]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return x;
}

Dense transpose(const Dense& a) {
  Dense t(a.size(), std::vector<double>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) t[j][i] = a[i][j];
  return t;
}

}  // namespace

TEST(Banded, StorageAndAccess) {
  BandedMatrix m(5, 1, 2);
  EXPECT_EQ(m.size(), 5u);
  EXPECT_EQ(m.lower(), 1u);
  EXPECT_EQ(m.upper(), 2u);
  EXPECT_EQ(m.storage().size(), 5u * 4u);
  m.set(2, 4, 3.0);
  m.add(2, 4, 1.5);
  m.set(3, 2, -1.0);
  EXPECT_EQ(m.get(2, 4), 4.5);
  EXPECT_EQ(m.get(3, 2), -1.0);
  EXPECT_EQ(m.get(4, 0), 0.0);
  EXPECT_TRUE(m.in_band(0, 2));
  EXPECT_FALSE(m.in_band(0, 3));
  EXPECT_FALSE(m.in_band(2, 0));
  EXPECT_THROW(m.set(0, 3, 1.0), std::out_of_range);
  EXPECT_THROW(m.add(4, 2, 1.0), std::out_of_range);
  EXPECT_THROW(BandedMatrix(3, 3, 0), std::invalid_argument);
}

TEST(Banded, MultiplyMatchesDense) {
  const BandedMatrix m = random_band(9, 2, 3, 1);
  const Dense d = to_dense(m);
  std::vector<double> x(9);
  for (std::size_t i = 0; i < 9; ++i) x[i] = std::sin(1.0 + static_cast<double>(i));
  const auto y = m.multiply(x);
  const auto yt = m.multiply_transposed(x);
  for (std::size_t i = 0; i < 9; ++i) {
    double s = 0, st = 0;
    for (std::size_t j = 0; j < 9; ++j) {
      s += d[i][j] * x[j];
      st += d[j][i] * x[j];
    }
    EXPECT_NEAR(y[i], s, 1e-14);
    EXPECT_NEAR(yt[i], st, 1e-14);
  }
  EXPECT_THROW(m.multiply(std::vector<double>(3)), std::invalid_argument);
}

TEST(Banded, SolveMatchesDenseElimination) {
  for (auto [n, p, q] : std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>{
           {1, 0, 0}, {6, 1, 1}, {14, 3, 3}, {22, 5, 5}, {40, 2, 4}, {12, 0, 3}}) {
    const BandedMatrix m = random_band(n, p, q, static_cast<unsigned>(n * 31 + p));
    std::vector<double> b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = std::cos(0.3 * static_cast<double>(i));
    const auto lu = gjp::lu_factor_banded(m);
    const auto x = lu.solve(b).x;
    const auto xt = lu.solve_transposed(b).x;
    const auto ref = dense_solve(to_dense(m), b);
    const auto reft = dense_solve(transpose(to_dense(m)), b);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_NEAR(x[i], ref[i], 1e-13);
      EXPECT_NEAR(xt[i], reft[i], 1e-13);
    }
    EXPECT_EQ(gjp::solve_banded(lu, b).x, x);
  }
}

TEST(Banded, FactorsReproduceMatrixWithinBand) {
  const BandedMatrix m = random_band(10, 3, 2, 7);
  const auto lu = gjp::lu_factor_banded(m);
  for (std::size_t i = 0; i < 10; ++i) {
    EXPECT_EQ(lu.l(i, i), 1.0);
    for (std::size_t j = 0; j < 10; ++j) {
      double s = 0;
      for (std::size_t k = 0; k < 10; ++k) s += lu.l(i, k) * lu.u(k, j);
      EXPECT_NEAR(s, m.get(i, j), 1e-14) << i << "," << j;
      if (j > i) EXPECT_EQ(lu.l(i, j), 0.0);
      if (i > j) EXPECT_EQ(lu.u(i, j), 0.0);
      // No fill outside the original band.
      if (!m.in_band(i, j)) {
        EXPECT_EQ(lu.l(i, j), 0.0);
        EXPECT_EQ(lu.u(i, j), 0.0);
      }
    }
  }
}

TEST(Banded, SingularPivotNamesTheRow) {
  BandedMatrix m(4, 1, 1);
  m.set(0, 0, 1.0);
  m.set(0, 1, 1.0);
  m.set(1, 0, 1.0);
  m.set(1, 1, 1.0);  // second pivot cancels to zero
  m.set(2, 2, 1.0);
  m.set(3, 3, 1.0);
  try {
    (void)gjp::lu_factor_banded(m);
    FAIL() << "expected SingularPivotError";
  } catch (const gjp::SingularPivotError& e) {
    EXPECT_EQ(e.row(), 1u);
  }
  EXPECT_THROW((void)gjp::lu_factor_banded(BandedMatrix(3, 0, 0)), gjp::NumericalError);
}

TEST(Banded, SolveRejectsLengthMismatch) {
  const auto lu = gjp::lu_factor_banded(random_band(5, 1, 1, 3));
  EXPECT_THROW(lu.solve(std::vector<double>(4)), std::invalid_argument);
  EXPECT_THROW(lu.solve_transposed(std::vector<double>(6)), std::invalid_argument);
}

TEST(Banded, OperationCountsAreLinearAndMatchClosedForm) {
  // Per eliminated row k: the multipliers take min(p, n-1-k) divisions, and each
  // updates min(q, n-1-k) entries with a multiply and a subtract.
  for (auto [p, q] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 3}, {5, 5}, {1, 2}}) {
    std::vector<double> per_row;
    for (std::size_t n : {20u, 40u, 80u, 160u}) {
      const auto lu = gjp::lu_factor_banded(random_band(n, p, q, 5));
      std::uint64_t expect = 0;
      for (std::size_t k = 0; k < n; ++k) {
        const std::uint64_t l = std::min(p, n - 1 - k), u = std::min(q, n - 1 - k);
        expect += l + 2 * l * u;
      }
      EXPECT_EQ(lu.factor_ops().total(), expect);
      const auto s = lu.solve(std::vector<double>(n, 1.0));
      per_row.push_back(static_cast<double>(lu.factor_ops().total() + s.ops.total()) / static_cast<double>(n));
    }
    // Cost per row settles: later rows add a fixed amount each.
    for (std::size_t i = 1; i < per_row.size(); ++i) EXPECT_LT(per_row[i], 1.1 * per_row.back());
    const double p1 = static_cast<double>(p), q1 = static_cast<double>(q);
    EXPECT_NEAR(per_row.back(), p1 + 2 * p1 * q1 + 2 * p1 + 2 * q1 + 1, 0.1 * (p1 + 2 * p1 * q1 + 2 * p1 + 2 * q1 + 1));
  }
}

TEST(Banded, DiagonalFastPaths) {
  std::vector<double> f{1.0, -2.0, 0.5, 3.0, 7.0};
  const auto a3 = gjp::solve_diagonal_third(f);
  const auto a5 = gjp::solve_diagonal_fifth(f);
  for (std::size_t k = 0; k < f.size(); ++k) {
    const double kk = static_cast<double>(k);
    EXPECT_DOUBLE_EQ(a3[k], f[k] / (2 * (kk + 1) * (kk + 3)));
    EXPECT_DOUBLE_EQ(a5[k], f[k] / (3 * (kk + 1) * (kk + 2) * (kk + 4) * (kk + 5)));
  }
  const auto m3 = gjp::solve_diagonal_third_moments(f);
  const auto m5 = gjp::solve_diagonal_fifth_moments(f);
  for (std::size_t k = 0; k < f.size(); ++k) {
    const double kk = static_cast<double>(k);
    EXPECT_DOUBLE_EQ(m3[k], (kk + 2) / 16 * f[k]);
    EXPECT_DOUBLE_EQ(m5[k], (kk + 3) / 384 * f[k]);
  }
}
