#include <benchmark/benchmark.h>

#include <cmath>

#include "gjp/analysis.hpp"
#include "gjp/quadrature.hpp"

namespace {

gjp::OperatorCoefficients ones(int order) {
  return gjp::OperatorCoefficients::ones(order == 3 ? gjp::Order::third : gjp::Order::fifth);
}

void BM_Assemble(benchmark::State& state) {
  const auto c = ones(static_cast<int>(state.range(0)));
  const int N = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(gjp::assemble_operator(c, N));
}

void BM_BandFactor(benchmark::State& state) {
  const int N = static_cast<int>(state.range(1));
  const auto m = gjp::assemble_operator(ones(static_cast<int>(state.range(0))), N);
  for (auto _ : state) benchmark::DoNotOptimize(gjp::lu_factor_banded(m));
  state.SetComplexityN(N);
}

void BM_BandSolve(benchmark::State& state) {
  const int N = static_cast<int>(state.range(1));
  const auto lu = gjp::lu_factor_banded(gjp::assemble_operator(ones(static_cast<int>(state.range(0))), N));
  const std::vector<double> b(lu.size(), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(lu.solve(b));
  state.SetComplexityN(N);
}

void BM_SolveThird(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(gjp::solve_third({1, 1, 1, [](double x) { return std::cosh(x); }, {}}, N));
}

void BM_SolveFifth(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(gjp::solve_fifth({1, 1, 1, 1, 1, [](double x) { return std::cosh(x); }, {}}, N));
}

void BM_GaussJacobiRule(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gjp::gauss_jacobi_rule(gjp::JacobiParams(1, 2), n));
}

void BM_ConditionFull(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gjp::condition_full(gjp::Order::fifth, N));
}

}  // namespace

BENCHMARK(BM_Assemble)->ArgsProduct({{3, 5}, {16, 64, 256}});
BENCHMARK(BM_BandFactor)->ArgsProduct({{3, 5}, {16, 64, 256, 1024}});
BENCHMARK(BM_BandSolve)->ArgsProduct({{3, 5}, {16, 64, 256, 1024}});
BENCHMARK(BM_SolveThird)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_SolveFifth)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_GaussJacobiRule)->Arg(16)->Arg(64)->Arg(256);
BENCHMARK(BM_ConditionFull)->Arg(16)->Arg(40);
BENCHMARK_MAIN();
