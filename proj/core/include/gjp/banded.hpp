#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gjp {

class BandedLu;

/// Square band matrix with p subdiagonals and q superdiagonals.
///
/// Storage is diagonal-major: diagonal d = j - i + p (0 .. p+q) occupies a
/// contiguous run of n slots indexed by row; slots that fall outside the
/// matrix are kept at zero.
class BandedMatrix {
 public:
  BandedMatrix() = default;
  /// Throws std::invalid_argument unless lower, upper < n (or n == 0).
  BandedMatrix(std::size_t n, std::size_t lower, std::size_t upper);

  std::size_t size() const noexcept { return n_; }
  std::size_t lower() const noexcept { return p_; }
  std::size_t upper() const noexcept { return q_; }

  bool in_band(std::size_t i, std::size_t j) const noexcept {
    return i < n_ && j < n_ && j + p_ >= i && i + q_ >= j;
  }

  /// Zero outside the band or the matrix.
  double get(std::size_t i, std::size_t j) const noexcept {
    return in_band(i, j) ? data_[slot(i, j)] : 0.0;
  }
  /// Throws std::out_of_range outside the band.
  void set(std::size_t i, std::size_t j, double v);
  void add(std::size_t i, std::size_t j, double v);

  /// y = A x
  std::vector<double> multiply(std::span<const double> x) const;
  /// y = A^T x
  std::vector<double> multiply_transposed(std::span<const double> x) const;

  std::span<const double> storage() const noexcept { return data_; }

 private:
  friend BandedLu lu_factor_banded(const BandedMatrix& m);
  std::size_t slot(std::size_t i, std::size_t j) const noexcept { return (j + p_ - i) * n_ + i; }
  double& ref(std::size_t i, std::size_t j) noexcept { return data_[slot(i, j)]; }

  std::size_t n_ = 0;
  std::size_t p_ = 0;
  std::size_t q_ = 0;
  std::vector<double> data_;
};

/// Arithmetic operation tally; every add, subtract, multiply and divide counts once.
struct OpCount {
  std::uint64_t additions = 0;
  std::uint64_t subtractions = 0;
  std::uint64_t multiplications = 0;
  std::uint64_t divisions = 0;

  std::uint64_t total() const noexcept {
    return additions + subtractions + multiplications + divisions;
  }
  OpCount& operator+=(const OpCount& o) noexcept {
    additions += o.additions;
    subtractions += o.subtractions;
    multiplications += o.multiplications;
    divisions += o.divisions;
    return *this;
  }
};

struct SolveResult {
  std::vector<double> x;
  OpCount ops;
};

/// In-band LU factors without pivoting: L unit lower with bandwidth p, U upper
/// with bandwidth q, packed in one band matrix.
class BandedLu {
 public:
  const BandedMatrix& packed() const noexcept { return lu_; }
  const OpCount& factor_ops() const noexcept { return ops_; }
  std::size_t size() const noexcept { return lu_.size(); }

  double l(std::size_t i, std::size_t j) const noexcept;
  double u(std::size_t i, std::size_t j) const noexcept;

  /// Solves A x = b. Throws std::invalid_argument on a length mismatch.
  SolveResult solve(std::span<const double> b) const;
  /// Solves A^T x = b.
  SolveResult solve_transposed(std::span<const double> b) const;

 private:
  friend BandedLu lu_factor_banded(const BandedMatrix& m);
  explicit BandedLu(BandedMatrix lu) : lu_(std::move(lu)) {}

  BandedMatrix lu_;
  OpCount ops_;
};

/// Throws SingularPivotError naming the row when a pivot has magnitude < 1e-300.
BandedLu lu_factor_banded(const BandedMatrix& m);

SolveResult solve_banded(const BandedLu& factors, std::span<const double> rhs);

/// Diagonal fast path for the third-order operator with zero lower-order
/// coefficients: a_k = f*_k / (2(k+1)(k+3)).
std::vector<double> solve_diagonal_third(std::span<const double> fstar);
/// The same coefficients from the unnormalized moments f_k: a_k = (k+2)/16 f_k.
std::vector<double> solve_diagonal_third_moments(std::span<const double> moments);

/// Fifth-order fast path: a_k = f*_k / r_k, r_k = 3(k+1)(k+2)(k+4)(k+5).
std::vector<double> solve_diagonal_fifth(std::span<const double> fstar);
/// a_k = (k+3)/384 f_k.
std::vector<double> solve_diagonal_fifth_moments(std::span<const double> moments);

}  // namespace gjp
