#include <benchmark/benchmark.h>

#include "bifurcato/dynamics.hpp"
#include "bifurcato/equilibria.hpp"
#include "bifurcato/focus.hpp"
#include "bifurcato/unfolding.hpp"

using namespace bifurcato;

namespace {

const DimensionlessParams ex51{-0.35, 1.0, 0.0988432, 0.0292698, 0.05};
const DimensionlessParams ex52{2.5, 0.02, 0.0300281, 0.0391069, 0.0387063};

void BM_solve_equilibria(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(solve_equilibria(ex51));
}
BENCHMARK(BM_solve_equilibria);

void BM_focal_values(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(focal_values_at_e2(ex52));
}
BENCHMARK(BM_focal_values);

void BM_codim_jacobian(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(codim_jacobian(ex52, {ParamName::a, ParamName::c, ParamName::n}, {1, 3, 5}));
}
BENCHMARK(BM_codim_jacobian);

void BM_poincare_return(benchmark::State& state) {
  const auto sec = section_for(ex51);
  for (auto _ : state) benchmark::DoNotOptimize(poincare_return(0.41, ex51, sec, Direction::Forward));
}
BENCHMARK(BM_poincare_return)->Unit(benchmark::kMillisecond);

void BM_find_limit_cycles(benchmark::State& state) {
  const double x_max = section_x_limit(ex51);
  for (auto _ : state) benchmark::DoNotOptimize(find_limit_cycles(ex51, x_max, 200));
}
BENCHMARK(BM_find_limit_cycles)->Unit(benchmark::kMillisecond);

void BM_bt2_jets(benchmark::State& state) {
  const auto base = bt2_base(-0.3, 0.5, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(bt2_jets(base));
}
BENCHMARK(BM_bt2_jets);

}  // namespace

BENCHMARK_MAIN();
