#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gjp::cli {

enum class ExitCode : int { ok = 0, usage = 1, numerical = 2, verify_failed = 3 };

struct RunConfig {
  std::string command;  // solve3, solve5, table1..table5, verify
  std::optional<int> order;
  int N = 16;
  std::vector<double> coeffs;  // empty means all zero
  std::optional<int> example;
  int j = 0;
  double m = 1.0;
  std::string out;  // empty writes to the given stream
  std::string format = "csv";

  // solve without --example: boundary values in the order of the boundary
  // structs, and monomial coefficients of f (lowest degree first).
  std::vector<double> bc;
  std::vector<double> rhs_poly;

  std::string mutate;  // verify only
};

/// Throws std::invalid_argument with a usage message.
void validate(const RunConfig& config);

/// Runs one command; diagnostics go to err. Never throws.
ExitCode run(const RunConfig& config, std::ostream& out, std::ostream& err);

int max_truncation();

}  // namespace gjp::cli
