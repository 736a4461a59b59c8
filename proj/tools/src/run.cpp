#include "gjp/cli/run.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "gjp/cli/examples.hpp"
#include "gjp/cli/tables.hpp"
#include "gjp/cli/verify.hpp"
#include "gjp/errors.hpp"

namespace gjp::cli {

int max_truncation() { return 4096; }

namespace {

constexpr int kSamples = 101;

bool is_solve(const std::string& c) { return c == "solve3" || c == "solve5"; }

int table_number(const std::string& c) {
  if (c.size() == 6 && c.starts_with("table") && c[5] >= '1' && c[5] <= '5') return c[5] - '0';
  return 0;
}

Order solve_order(const RunConfig& c) { return c.command == "solve3" ? Order::third : Order::fifth; }

std::string g(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

OperatorCoefficients coefficients_of(const RunConfig& c, Order order) {
  if (c.coeffs.empty()) return OperatorCoefficients::zero(order);
  return OperatorCoefficients::from_values(order, c.coeffs);
}

struct SolveOutput {
  SolveReport report;
  std::optional<ExampleFamily> example;
  std::optional<double> error;
};

SolveOutput solve(const RunConfig& c) {
  const Order order = solve_order(c);
  const OperatorCoefficients coeffs = coefficients_of(c, order);
  SolveOutput o;
  if (c.example) {
    o.example = ExampleFamily::make(*c.example, c.j, c.m);
    ExampleRun r = solve_example(*o.example, coeffs, c.N);
    o.report = std::move(r.report);
    o.error = r.error;
    return o;
  }
  const Polynomial p(c.rhs_poly.empty() ? std::vector<double>{0.0} : c.rhs_poly);
  const RhsFunction f = [p](double x) { return p(x); };
  std::vector<double> bc = c.bc;
  bc.resize(static_cast<std::size_t>(as_int(order)), 0.0);
  const auto v = coeffs.values();
  if (order == Order::third) {
    o.report = solve_third(ThirdOrderProblem{v[0], v[1], v[2], f, {bc[0], bc[1], bc[2]}}, c.N);
  } else {
    o.report = solve_fifth(
        FifthOrderProblem{v[0], v[1], v[2], v[3], v[4], f, {bc[0], bc[1], bc[2], bc[3], bc[4]}}, c.N);
  }
  return o;
}

Table solve_table(const RunConfig& c, const SolveOutput& o) {
  const Order order = solve_order(c);
  Table t;
  t.header = {"quantity", "index", "x", "value", "exact"};
  const auto& s = o.report.solution;
  for (std::size_t k = 0; k < s.coefficients.size(); ++k)
    t.rows.push_back({"coefficient", std::to_string(k), "", g(s.coefficients[k]), ""});
  for (int i = 0; i < kSamples; ++i) {
    const double x = -1.0 + 2.0 * i / (kSamples - 1);
    t.rows.push_back({"sample", std::to_string(i), g(x), g(evaluate_solution(s, x)),
                      o.example ? g(o.example->exact(x)) : ""});
  }
  t.rows.push_back({"residual", "", "", g(o.report.residual), ""});
  if (o.error) t.rows.push_back({"max_error", "", "", format_error(*o.error), ""});
  t.rows.push_back({"path", "", "", o.report.diagonal_path ? "diagonal" : "band_lu", ""});
  t.rows.push_back({"factor_ops", "", "", std::to_string(o.report.factor_ops.total()), ""});
  t.rows.push_back({"solve_ops", "", "", std::to_string(o.report.solve_ops.total()), ""});

  const ConditionReport r = condition_full(order, c.N, coefficients_of(c, order));
  t.rows.push_back({"eig_min", "", "", format_value(r.eig_min), ""});
  t.rows.push_back({"eig_max", "", "", format_value(r.eig_max), ""});
  t.rows.push_back({"cond", "", "", format_value(r.cond), ""});
  return t;
}

Table verify_table(const VerifyReport& r) {
  Table t;
  t.header = {"kind", "name", "status", "max_deviation", "tolerance", "detail"};
  for (const SuiteResult& s : r.suites) {
    t.rows.push_back({"suite", s.name, s.passed ? "pass" : "fail", format_error(s.max_deviation),
                      format_error(s.tolerance), s.detail});
  }
  for (const EntryDeviation& d : r.printed_deviations) {
    t.rows.push_back({"printed_entry", "order" + std::to_string(as_int(d.order)) + " " + d.label,
                      "differs", format_error(std::abs(d.printed - d.oracle)), "",
                      "k=" + std::to_string(d.k) + " printed=" + g(d.printed) + " oracle=" + g(d.oracle)});
  }
  for (const FactorNote& f : r.printed_factors) {
    const bool same = std::abs(f.printed - f.exact) <= 1e-12 * std::abs(f.exact);
    t.rows.push_back({"printed_lift_factor", "order" + std::to_string(as_int(f.order)) + " k=" + std::to_string(f.k),
                      same ? "agrees" : "differs", format_error(std::abs(f.printed - f.exact)), "",
                      "printed=" + g(f.printed) + " exact=" + g(f.exact)});
  }
  return t;
}

void emit(const RunConfig& c, const Table& t, std::ostream& out) {
  if (c.out.empty()) {
    c.format == "text" ? write_text(out, t) : write_csv(out, t);
    return;
  }
  std::ofstream file(c.out, std::ios::binary);
  if (!file) throw std::ios_base::failure("cannot open " + c.out + " for writing");
  c.format == "text" ? write_text(file, t) : write_csv(file, t);
  file.flush();
  if (!file) throw std::ios_base::failure("write to " + c.out + " failed");
}

}  // namespace

void validate(const RunConfig& c) {
  const auto fail = [](const std::string& m) { throw std::invalid_argument(m); };
  const int table = table_number(c.command);
  if (!is_solve(c.command) && table == 0 && c.command != "verify")
    fail("unknown command '" + c.command + "' (solve3, solve5, table1..table5, verify)");
  if (c.format != "csv" && c.format != "text") fail("--format must be csv or text");
  if (c.order && *c.order != 3 && *c.order != 5) fail("--order must be 3 or 5");
  if (!c.mutate.empty() && c.command != "verify") fail("--mutate only applies to verify");
  if (c.order && table != 1 && !is_solve(c.command)) fail("--order only applies to table1 and solve");

  if (!is_solve(c.command)) return;
  const Order order = solve_order(c);
  const int q = as_int(order);
  if (c.order && *c.order != q) fail(c.command + " is order " + std::to_string(q));
  if (c.N < q || c.N > max_truncation())
    fail("--n must be in [" + std::to_string(q) + ", " + std::to_string(max_truncation()) + "] for order " +
         std::to_string(q));
  if (!c.coeffs.empty() && c.coeffs.size() != static_cast<std::size_t>(order == Order::third ? 3 : 5))
    fail("--coeffs needs " + std::string(order == Order::third ? "3" : "5") + " values for " + c.command);
  for (double v : c.coeffs)
    if (!std::isfinite(v)) fail("--coeffs values must be finite");
  if (c.example) {
    if (*c.example < 1 || *c.example > 3) fail("--example must be 1, 2 or 3");
    const int want = *c.example == 2 ? 5 : 3;
    if (want != q) fail("example " + std::to_string(*c.example) + " is order " + std::to_string(want));
    if (c.j < 0) fail("--j must be >= 0");
    if (!std::isfinite(c.m)) fail("--m must be finite");
    if (!c.bc.empty() || !c.rhs_poly.empty()) fail("--bc and --rhs-poly conflict with --example");
  }
  if (c.bc.size() > static_cast<std::size_t>(q))
    fail("--bc takes at most " + std::to_string(q) + " values for order " + std::to_string(q));
  for (double v : c.bc)
    if (!std::isfinite(v)) fail("--bc values must be finite");
  for (double v : c.rhs_poly)
    if (!std::isfinite(v)) fail("--rhs-poly values must be finite");
}

ExitCode run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    validate(c);
  } catch (const std::invalid_argument& e) {
    err << "gjp: " << e.what() << '\n';
    return ExitCode::usage;
  }

  try {
    if (is_solve(c.command)) {
      const SolveOutput o = solve(c);
      emit(c, solve_table(c, o), out);
      return ExitCode::ok;
    }
    if (const int table = table_number(c.command)) {
      std::optional<Order> only;
      if (c.order) only = *c.order == 3 ? Order::third : Order::fifth;
      emit(c, run_table(table, only), out);
      return ExitCode::ok;
    }
    const VerifyReport r = run_verify(VerifyOptions{c.mutate});
    emit(c, verify_table(r), out);
    if (!r.passed()) {
      for (const SuiteResult& s : r.suites)
        if (!s.passed) err << "gjp: suite " << s.name << " failed: " << s.detail << '\n';
      return ExitCode::verify_failed;
    }
    return ExitCode::ok;
  } catch (const NumericalError& e) {
    err << "gjp: numerical failure: " << e.what() << '\n';
    return ExitCode::numerical;
  } catch (const std::ios_base::failure& e) {
    err << "gjp: " << e.what() << '\n';
    return ExitCode::usage;
  } catch (const std::logic_error& e) {
    // Bad input found past validation, e.g. a non-finite right-hand side.
    err << "gjp: " << e.what() << '\n';
    return ExitCode::usage;
  } catch (const std::exception& e) {
    err << "gjp: " << e.what() << '\n';
    return ExitCode::numerical;
  }
}

}  // namespace gjp::cli
