#include <benchmark/benchmark.h>

#include "twistgate/curve.hpp"
#include "twistgate/fieldsearch.hpp"
#include "twistgate/lseries.hpp"
#include "twistgate/reduction.hpp"
#include "twistgate/rootnum.hpp"

using namespace twistgate;

namespace {

const WeierstrassModel& e15() { return CurveTable::bundled().at("15a1"); }

void BM_CountPoints(benchmark::State& state) {
  const std::int64_t p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(count_points(e15(), p));
}
BENCHMARK(BM_CountPoints)->Arg(7)->Arg(1009)->Arg(100'003)->Arg(999'983);

void BM_DirichletCoefficients(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet_coefficients(e15(), state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DirichletCoefficients)->Arg(1'000)->Arg(10'000)->Arg(100'000);

void BM_GlobalRootNumberOfTwist(benchmark::State& state) {
  const WeierstrassModel T = quadratic_twist(e15(), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(global_root_number(T).value());
}
BENCHMARK(BM_GlobalRootNumberOfTwist)->Arg(17)->Arg(901)->Arg(9901);

void BM_LValue(benchmark::State& state) {
  const std::int64_t d = state.range(0);
  const WeierstrassModel E = d == 1 ? e15() : quadratic_twist(e15(), d);
  for (auto _ : state) benchmark::DoNotOptimize(l_value_at_1(E).value);
}
BENCHMARK(BM_LValue)->Arg(1)->Arg(17)->Arg(1037)->Unit(benchmark::kMillisecond);

void BM_Search(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(search(5, static_cast<std::size_t>(state.range(0)), state.range(1)));
}
BENCHMARK(BM_Search)->Args({1, 1000})->Args({2, 300})->Args({3, 150})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
