#include <benchmark/benchmark.h>

#include "morse/dynamics.hpp"
#include "morse/eigen.hpp"
#include "morse/farey.hpp"

namespace {

const morse::MorseSystem& system42() {
  static const morse::MorseSystem s({42, 1, std::nullopt});
  return s;
}

void BM_Eigenbasis(benchmark::State& state) {
  const auto& s = system42();
  const auto grid = morse::suggest_grid(s, {.n_points = state.range(0)});
  for (auto _ : state) benchmark::DoNotOptimize(morse::eigenbasis(s, grid));
}
BENCHMARK(BM_Eigenbasis)->Arg(1024)->Arg(4096);

void BM_Evolve(benchmark::State& state) {
  const auto& s = system42();
  const auto grid = morse::suggest_grid(s);
  const morse::TimeGrid tgrid{0.0, s.revivals().T_rev, state.range(0)};
  const unsigned threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(morse::evolve(s, grid, tgrid, {.threads = threads}));
  state.SetItemsProcessed(state.iterations() * state.range(0) * grid.n_points);
}
BENCHMARK(BM_Evolve)->Args({4096, 1})->Args({4096, 0})->Unit(benchmark::kMillisecond);

void BM_RevivalScan(benchmark::State& state) {
  const auto& s = system42();
  for (auto _ : state) benchmark::DoNotOptimize(morse::revival_scan(s, state.range(0)));
}
BENCHMARK(BM_RevivalScan)->Arg(4096)->Arg(65536);

void BM_ClassicalPeriod(benchmark::State& state) {
  const auto& s = system42();
  const double e = 0.5 * s.derived.D;
  for (auto _ : state) benchmark::DoNotOptimize(morse::classical_period(s, e));
}
BENCHMARK(BM_ClassicalPeriod);

void BM_FareyTree(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(morse::farey::farey_tree(state.range(0)));
}
BENCHMARK(BM_FareyTree)->Arg(7)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
