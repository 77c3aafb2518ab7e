#include <benchmark/benchmark.h>

#include "dualbern/approx.hpp"
#include "dualbern/dual.hpp"
#include "dualbern/quadrature.hpp"

namespace {

using dualbern::WeightParams;

const WeightParams kParams{-0.33, 5.66};
// Grid benchmarks use the symmetric weight: for strongly skewed weights and
// large n the recurrence health check falls back to the O(n^2) path.
const WeightParams kGridParams{0.0, 0.0};

// One full table on the grid x_k = k/M, M = 100.
template <dualbern::DualMethod Method>
void BM_Grid(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int k = 0; k <= 100; ++k) benchmark::DoNotOptimize(dualbern::evaluate(Method, n, kGridParams, k / 100.0));
  }
  state.SetComplexityN(n);
}

BENCHMARK(BM_Grid<dualbern::DualMethod::DegreeElevation>)->RangeMultiplier(2)->Range(10, 160)->Complexity();
BENCHMARK(BM_Grid<dualbern::DualMethod::RecurrenceOn_i>)->RangeMultiplier(2)->Range(10, 160)->Complexity();
BENCHMARK(BM_Grid<dualbern::DualMethod::ShortJacobi>)->RangeMultiplier(2)->Range(10, 40);
BENCHMARK(BM_Grid<dualbern::DualMethod::JacobiHahn>)->RangeMultiplier(2)->Range(10, 40);

void BM_GaussJacobiRule(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dualbern::gauss_jacobi_rule(m, kParams));
}
BENCHMARK(BM_GaussJacobiRule)->Arg(16)->Arg(32)->Arg(64);

void BM_LsqExp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = *dualbern::builtin_integrand("exp");
  for (auto _ : state)
    benchmark::DoNotOptimize(dualbern::lsq_bezier(f, n, kParams, dualbern::default_quad_nodes(n)));
}
BENCHMARK(BM_LsqExp)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
