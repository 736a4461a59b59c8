#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gjp/analysis.hpp"

namespace gjp::cli {

/// Formatted rows, header first; empty strings are missing cells.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Quotes fields containing commas, quotes or newlines.
std::string csv_field(const std::string& s);
void write_csv(std::ostream& out, const Table& t);
void write_text(std::ostream& out, const Table& t);

std::string format_error(double v);  // 6 significant digits
std::string format_ratio(double v);  // 4 significant digits
std::string format_value(double v);  // condition numbers, 6 significant digits

struct ConditionRow {
  ConditionReport report;
  std::optional<double> reference;
};

struct DRow {
  int N = 0;
  ConditionReport d1;
  ConditionReport d2;
  double reference_d1 = 0.0;
  double reference_d2 = 0.0;
};

struct ErrorRow {
  int N = 0;
  int j = 0;  // example 1 only
  double m = 0.0;
  std::vector<double> coefficients;
  double error = 0.0;
  std::optional<double> reference;
};

/// N = 16, 20, ..., 40.
std::vector<ConditionRow> table1_rows(std::optional<Order> only = std::nullopt);
std::vector<DRow> table2_rows();
std::vector<ErrorRow> table3_rows();
std::vector<ErrorRow> table4_rows();
std::vector<ErrorRow> table5_rows();

/// which = 1..5; throws std::invalid_argument otherwise.
Table run_table(int which, std::optional<Order> only = std::nullopt);

}  // namespace gjp::cli
