#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "gjp/cli/examples.hpp"
#include "gjp/cli/run.hpp"
#include "gjp/cli/tables.hpp"
#include "gjp/cli/verify.hpp"

using namespace gjp::cli;
using gjp::OperatorCoefficients;
using gjp::Order;

namespace {

struct Captured {
  ExitCode code;
  std::string out, err;
};

Captured run_config(const RunConfig& c) {
  std::ostringstream out, err;
  const ExitCode code = run(c, out, err);
  return {code, out.str(), err.str()};
}

RunConfig config(std::string command) {
  RunConfig c;
  c.command = std::move(command);
  return c;
}

double csv_value(const std::string& csv, const std::string& quantity) {
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line))
    if (line.starts_with(quantity + ",")) return std::stod(line.substr(line.find_last_of(',', line.size() - 2) + 1));
  return std::nan("");
}

}  // namespace

TEST(Examples, ClosedFormDerivativesMatchFiniteDifferences) {
  const double h = 1e-4;
  for (const ExampleFamily& ex : {ExampleFamily::first(2, 1.5), ExampleFamily::second(3), ExampleFamily::third(2)}) {
    for (int q = 0; q < 5; ++q) {
      for (double x : {-0.6, 0.1, 0.7}) {
        const double fd = (ex.derivative(x + h, q) - ex.derivative(x - h, q)) / (2 * h);
        const double d = ex.derivative(x, q + 1);
        EXPECT_NEAR(d, fd, 1e-6 * (1 + std::abs(d))) << "example " << ex.id() << " q=" << q;
      }
    }
  }
}

TEST(Examples, ExactSolutions) {
  const auto e1 = ExampleFamily::first(1, 1);
  const auto e2 = ExampleFamily::second(3);
  const auto e3 = ExampleFamily::third(1);
  for (double x : {-0.8, 0.0, 0.35}) {
    EXPECT_NEAR(e1.exact(x), (1 - x * x) * x * std::sin(std::numbers::pi * x), 1e-15);
    EXPECT_NEAR(e2.exact(x), std::pow(1 - x * x, 2) * (1 - x) * std::cosh(3 * x), 1e-13);
    EXPECT_NEAR(e3.exact(x), std::sinh(x), 1e-15);
  }
  EXPECT_EQ(e1.order(), Order::third);
  EXPECT_EQ(e2.order(), Order::fifth);
}

TEST(Examples, HomogeneousConditionsHoldIdentically) {
  for (int j : {0, 1, 3})
    for (double m : {1.0, 2.0, 3.0}) {
      const auto e = ExampleFamily::first(j, m);
      EXPECT_NEAR(e.exact(-1), 0, 1e-15);
      EXPECT_NEAR(e.exact(1), 0, 1e-15);
      EXPECT_NEAR(e.derivative(1, 1), 0, 1e-14);
    }
  const auto e2 = ExampleFamily::second(2);
  for (int q = 0; q <= 1; ++q) {
    EXPECT_NEAR(e2.derivative(-1, q), 0, 1e-13);
    EXPECT_NEAR(e2.derivative(1, q), 0, 1e-13);
  }
  EXPECT_NEAR(e2.derivative(1, 2), 0, 1e-12);
  const auto b3 = ExampleFamily::third(1).third_boundary();
  EXPECT_DOUBLE_EQ(b3.a_minus, -std::sinh(1.0));
  EXPECT_DOUBLE_EQ(b3.a_plus, std::sinh(1.0));
  EXPECT_DOUBLE_EQ(b3.a1_plus, std::cosh(1.0));
}

TEST(Examples, RhsAppliesTheOperator) {
  const auto e = ExampleFamily::third(1.3);
  const auto f = e.rhs(OperatorCoefficients::third(2, 3, 4));
  for (double x : {-0.5, 0.2}) {
    const double expect = e.derivative(x, 3) - 2 * e.derivative(x, 2) - 3 * e.derivative(x, 1) + 4 * e.exact(x);
    EXPECT_NEAR(f(x), expect, 1e-13);
  }
  EXPECT_THROW(e.rhs(OperatorCoefficients::ones(Order::fifth)), std::invalid_argument);
  EXPECT_THROW(ExampleFamily::make(4, 0, 1), std::invalid_argument);
  EXPECT_THROW(ExampleFamily::make(1, -1, 1), std::invalid_argument);
}

TEST(Tables, ConditionTableRows) {
  const auto rows = table1_rows(Order::third);
  ASSERT_EQ(rows.size(), 7u);
  const double expect[] = {74.667, 120, 176, 242.667, 320, 408, 506.667};
  for (std::size_t i = 0; i < 7; ++i) {
    EXPECT_EQ(rows[i].report.N, 16 + 4 * static_cast<int>(i));
    EXPECT_NEAR(rows[i].report.cond, expect[i], 1e-3 * expect[i]);
  }
  EXPECT_EQ(table1_rows().size(), 14u);
}

TEST(Tables, PublishedSpotChecks) {
  for (const ErrorRow& r : table3_rows())
    if (r.N == 16 && r.j == 1 && r.m == 1 && r.coefficients == std::vector<double>{0, 0, 0}) EXPECT_LE(r.error, 1e-8);
  bool seen = false;
  for (const ErrorRow& r : table5_rows())
    if (r.N == 12 && r.m == 1 && r.coefficients == std::vector<double>{1, 1, 1}) {
      EXPECT_LE(r.error, 1e-11);
      seen = true;
    }
  EXPECT_TRUE(seen);
  EXPECT_EQ(table3_rows().size(), 40u);
  EXPECT_EQ(table4_rows().size(), 20u);
  EXPECT_EQ(table5_rows().size(), 12u);
}

TEST(Tables, CsvLayoutAndStability) {
  const Table t = run_table(5);
  std::ostringstream a, b;
  write_csv(a, t);
  write_csv(b, run_table(5));
  EXPECT_EQ(a.str(), b.str());
  EXPECT_TRUE(a.str().starts_with("N,m,alpha1,beta1,gamma1,E,reference,ratio\n"));
  EXPECT_EQ(a.str().find('\r'), std::string::npos);
  EXPECT_THROW(run_table(6), std::invalid_argument);
  EXPECT_EQ(format_error(1.0 / 3), "3.33333e-01");
  EXPECT_EQ(format_ratio(1.23456), "1.235");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"x\""), "\"say \"\"x\"\"\"");
}

TEST(Run, SolveZeroProblemGivesZeroSolution) {
  const auto r = run_config(config("solve3"));
  EXPECT_EQ(r.code, ExitCode::ok);
  EXPECT_EQ(csv_value(r.out, "residual"), 0.0);
  EXPECT_NE(r.out.find("coefficient,0,,0,"), std::string::npos);
}

TEST(Run, SolveExamples) {
  RunConfig c = config("solve3");
  c.example = 1;
  c.j = 0;
  c.m = 1;
  c.coeffs = {2, 3, 4};
  c.N = 16;
  auto r = run_config(c);
  ASSERT_EQ(r.code, ExitCode::ok) << r.err;
  EXPECT_LE(csv_value(r.out, "max_error"), 1e-8);

  c = config("solve5");
  c.example = 2;
  c.m = 1;
  c.coeffs = {1, 1, 1, 1, 1};
  c.N = 16;
  r = run_config(c);
  ASSERT_EQ(r.code, ExitCode::ok) << r.err;
  EXPECT_LE(csv_value(r.out, "max_error"), 1e-11);
}

TEST(Run, SolveWithPolynomialDataWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "gjp_run_test.csv";
  RunConfig c = config("solve3");
  c.bc = {1, 2, 0};
  c.rhs_poly = {1, 0, 1};
  c.N = 10;
  c.out = path.string();
  const auto r = run_config(c);
  ASSERT_EQ(r.code, ExitCode::ok) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream body;
  body << in.rdbuf();
  EXPECT_NE(body.str().find("sample,0,-1,1,"), std::string::npos);
  EXPECT_NE(body.str().find("sample,100,1,2,"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Run, UsageErrors) {
  const auto bad = [](RunConfig c) { return run_config(c).code; };
  EXPECT_EQ(bad(config("solve7")), ExitCode::usage);
  RunConfig c = config("solve3");
  c.N = 2;
  EXPECT_EQ(bad(c), ExitCode::usage);
  c = config("solve5");
  c.coeffs = {1, 2, 3};
  EXPECT_EQ(bad(c), ExitCode::usage);
  c = config("solve5");
  c.example = 1;
  EXPECT_EQ(bad(c), ExitCode::usage);
  c = config("solve3");
  c.example = 1;
  c.j = -1;
  EXPECT_EQ(bad(c), ExitCode::usage);
  c = config("table1");
  c.format = "json";
  EXPECT_EQ(bad(c), ExitCode::usage);
  c = config("table3");
  c.order = 3;
  EXPECT_EQ(bad(c), ExitCode::usage);
  c = config("verify");
  c.mutate = "X9(k,k)";
  EXPECT_EQ(bad(c), ExitCode::usage);
  c = config("table2");
  c.out = "/nonexistent-dir/x.csv";
  EXPECT_EQ(bad(c), ExitCode::usage);
}

TEST(Run, NumericalFailureExitCode) {
  RunConfig c = config("solve3");
  c.example = 1;
  c.m = 1e5;
  EXPECT_EQ(run_config(c).code, ExitCode::numerical);
}

TEST(Verify, FreshBuildPassesAndReportsPrintedDeviations) {
  const auto r = run_config(config("verify"));
  EXPECT_EQ(r.code, ExitCode::ok) << r.err;
  EXPECT_NE(r.out.find("suite,oracle_equivalence_third,pass"), std::string::npos);
  EXPECT_NE(r.out.find("printed_entry,\"order3 E0(k+2,k)\",differs"), std::string::npos);
  EXPECT_EQ(r.out.find("printed_entry,order5"), std::string::npos);
  EXPECT_NE(r.out.find("printed_lift_factor,order3 k=1,differs"), std::string::npos);
}

TEST(Verify, SignFlipOnTheDiagonalIsCaught) {
  RunConfig c = config("verify");
  c.mutate = "E0(k,k)";
  const auto r = run_config(c);
  EXPECT_EQ(r.code, ExitCode::verify_failed);
  EXPECT_NE(r.err.find("oracle_equivalence_third"), std::string::npos);
  EXPECT_NE(r.err.find("entry (k,k)"), std::string::npos);
}

TEST(Verify, EveryEntryMutationIsCaught) {
  for (Order o : {Order::third, Order::fifth})
    for (const auto& e : gjp::default_entries(o)) {
      const auto table = mutated_entries(o, std::string(e.label));
      EXPECT_FALSE(suite_oracle_equivalence(o, 16, table).passed) << e.label;
    }
}

TEST(Verify, PrintedFactorsAgainstExact) {
  const auto f = printed_lift_factors();
  ASSERT_EQ(f.size(), 6u);
  EXPECT_NEAR(f[0].exact, 4.0 / 5, 1e-14);
  EXPECT_NEAR(f[1].exact, 4.0 / 7, 1e-14);
  EXPECT_NEAR(f[2].exact, 6.0 / 7, 1e-14);
  EXPECT_NEAR(f[5].exact, 48.0 / 143, 1e-14);
}
