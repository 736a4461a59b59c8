#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gjp {

/// Base class for failures of a numerical procedure on otherwise valid input
/// (a zero pivot, an iteration that does not settle).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SingularPivotError : public NumericalError {
 public:
  SingularPivotError(std::size_t row, double pivot)
      : NumericalError("singular pivot at row " + std::to_string(row) +
                       " (|pivot| = " + std::to_string(pivot) + ")"),
        row_(row) {}

  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

}  // namespace gjp
