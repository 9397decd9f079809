#include <benchmark/benchmark.h>

#include "isotriv/configs.hpp"
#include "isotriv/int_matrix.hpp"
#include "isotriv/sl2z.hpp"
#include "isotriv/torus_analysis.hpp"

using namespace isotriv;
using torus::IntMatrix;

static void BM_NormalForm(benchmark::State& state) {
  const auto a = sl2z::alpha();
  const auto b = sl2z::beta();
  sl2z::UnimodularMatrix m;
  for (int i = 0; i < state.range(0); ++i) m = m * a * b * a * a * b;
  for (auto _ : state) benchmark::DoNotOptimize(sl2z::normal_form(m));
}
BENCHMARK(BM_NormalForm)->Arg(4)->Arg(32)->Arg(256);

static void BM_RigiditySearch(benchmark::State& state) {
  const auto a = sl2z::alpha();
  const std::vector<sl2z::UnimodularMatrix> classes{a.pow(4), a.pow(4), a.pow(4)};
  for (auto _ : state) benchmark::DoNotOptimize(sl2z::rigidity_search(classes, state.range(0)));
}
BENCHMARK(BM_RigiditySearch)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_Profiles(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(configs::enumerate_profiles(weierstrass::JCase::Zero));
}
BENCHMARK(BM_Profiles);

static void BM_SmithForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>((i * 7 + j * 13 + i * j) % 11) - 5;
  }
  for (auto _ : state) benchmark::DoNotOptimize(torus::smith_normal_form(m));
}
BENCHMARK(BM_SmithForm)->Arg(4)->Arg(8)->Arg(12);

static void BM_Inventory(benchmark::State& state) {
  const auto g = torus::translated_action(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(torus::singularity_inventory(g));
}
BENCHMARK(BM_Inventory)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Obstruction(benchmark::State& state) {
  const auto g = torus::matsushita_action(6, 3);
  for (auto _ : state) benchmark::DoNotOptimize(torus::desingularization_obstruction(g));
}
BENCHMARK(BM_Obstruction)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
