#include <benchmark/benchmark.h>

#include <vector>

#include "fkfront/solver.hpp"
#include "fkfront/spectral.hpp"

using namespace fkfront;

namespace {

void BM_BuildOperator(benchmark::State& state) {
  const Grid g(100.0, static_cast<std::size_t>(state.range(0)));
  const auto a = make_quadratic_diffusion(0.1);
  for (auto _ : state) benchmark::DoNotOptimize(build_operator(g, a));
}
BENCHMARK(BM_BuildOperator)->Arg(501)->Arg(4001);

void BM_TridiagonalSolve(benchmark::State& state) {
  const Grid g(100.0, static_cast<std::size_t>(state.range(0)));
  const auto op = build_operator(g, make_quadratic_diffusion(0.1));
  const std::vector<double> rhs(g.size(), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(tridiagonal_solve(op, 0.01, rhs));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TridiagonalSolve)->Arg(501)->Arg(4001);

void BM_ImexStep(benchmark::State& state) {
  const Grid g(100.0, static_cast<std::size_t>(state.range(0)));
  const auto op = build_operator(g, make_quadratic_diffusion(0.1));
  const auto f = logistic_reaction();
  Field u = step_initial_condition(g, FrontSpec{-35.0});
  for (auto _ : state) benchmark::DoNotOptimize(imex_step(u, op, f, 0.01));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ImexStep)->Arg(501)->Arg(4001);

void BM_StepperAdvance(benchmark::State& state) {
  const Grid g(100.0, static_cast<std::size_t>(state.range(0)));
  const ImexStepper stepper(build_operator(g, make_quadratic_diffusion(0.1)), logistic_reaction(), 0.01);
  std::vector<double> u = step_initial_condition(g, FrontSpec{-35.0}).values;
  for (auto _ : state) {
    stepper.advance(u);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_StepperAdvance)->Arg(501)->Arg(4001);

void BM_SimulateReference(benchmark::State& state) {
  const Grid g(100.0, 501);
  const auto a = make_quadratic_diffusion(0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        simulate(g, a, logistic_reaction(), FrontSpec{-35.0}, SolverConfig{0.01, 20.0, 10}));
  }
}
BENCHMARK(BM_SimulateReference)->Unit(benchmark::kMillisecond);

void BM_Eigenproblem(benchmark::State& state) {
  const Grid g(100.0, static_cast<std::size_t>(state.range(0)));
  const auto a = make_quadratic_diffusion(0.1);
  for (auto _ : state) benchmark::DoNotOptimize(solve_eigenproblem(a, g, 64));
}
BENCHMARK(BM_Eigenproblem)->Arg(201)->Arg(501)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
