#pragma once

#include <string>
#include <vector>

#include "gjp/assembly.hpp"

namespace gjp::cli {

struct SuiteResult {
  std::string name;
  bool passed = true;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  std::string detail;  // the worst case, or the first failure
};

/// A published closed-form entry that disagrees with the oracle.
struct EntryDeviation {
  Order order = Order::third;
  std::string label;
  int k = 0;
  double printed = 0.0;
  double oracle = 0.0;
};

/// A published lift-correction factor next to the exact projection factor.
struct FactorNote {
  Order order = Order::third;
  int k = 0;
  double printed = 0.0;
  double exact = 0.0;
};

struct VerifyOptions {
  /// Label of an assembly entry (e.g. "E0(k,k)") whose sign is flipped before
  /// checking, to confirm the oracle suite catches it. Empty for none.
  std::string mutate;
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  std::vector<EntryDeviation> printed_deviations;
  std::vector<FactorNote> printed_factors;

  bool passed() const;
};

VerifyReport run_verify(const VerifyOptions& options = {});

// Individual suites.
SuiteResult suite_orthogonality();
SuiteResult suite_endpoint_normalization();
SuiteResult suite_shift_identities();
SuiteResult suite_derivative_relation();
SuiteResult suite_quadrature_exactness();
SuiteResult suite_highest_derivative(Order order);
SuiteResult suite_legendre_expansions();
SuiteResult suite_boundary_vanishing();
/// N <= max_N, coefficient sets {0, 1, (2,3,4) or (1,2,1,2,1)}.
SuiteResult suite_oracle_equivalence(Order order, int max_N = 24, EntryTable table = {});
SuiteResult suite_band_structure();
SuiteResult suite_lift_reconstruction();
SuiteResult suite_modified_rhs();
SuiteResult suite_manufactured_solution();
SuiteResult suite_diagonal_fast_path();
SuiteResult suite_operation_counts();
SuiteResult suite_condition_diagonal();

std::vector<EntryDeviation> printed_entry_deviations(Order order, int N = 24);
std::vector<FactorNote> printed_lift_factors();

/// Copy of the default table with the labelled entry negated; throws
/// std::invalid_argument for an unknown label.
std::vector<EntryFormula> mutated_entries(Order order, const std::string& label);

}  // namespace gjp::cli
