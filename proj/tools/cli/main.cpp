#include <iostream>

#include "CLI11.hpp"
#include "gjp/cli/run.hpp"

int main(int argc, char** argv) {
  gjp::cli::RunConfig c;
  CLI::App app{"Dual Petrov-Galerkin solver for third- and fifth-order boundary value problems"};
  app.add_option("command", c.command, "solve3 | solve5 | table1..table5 | verify")->required();
  app.add_option("--order", c.order, "3 or 5 (table1 and solve)");
  app.add_option("--n", c.N, "truncation N");
  app.add_option("--coeffs", c.coeffs, "operator coefficients a,b,c[,d,e]")->delimiter(',');
  app.add_option("--example", c.example, "built-in example 1, 2 or 3");
  app.add_option("--j", c.j, "example 1 power of x");
  app.add_option("--m", c.m, "example frequency or rate");
  app.add_option("--out", c.out, "output file (default stdout)");
  app.add_option("--format", c.format, "csv or text");
  app.add_option("--bc", c.bc, "boundary values, in the order u(-1),u(1),... (solve without --example)")
      ->delimiter(',');
  app.add_option("--rhs-poly", c.rhs_poly, "monomial coefficients of f, lowest degree first")
      ->delimiter(',');
  app.add_option("--mutate", c.mutate, "verify: flip the sign of the labelled entry, e.g. E0(k,k)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(gjp::cli::ExitCode::usage);
  }
  return static_cast<int>(gjp::cli::run(c, std::cout, std::cerr));
}
