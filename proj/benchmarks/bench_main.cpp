#include <benchmark/benchmark.h>

#include "zptower/families.hpp"
#include "zptower/forests.hpp"
#include "zptower/iwasawa.hpp"

namespace {

zpt::RamifiedGraph chorded(unsigned n) { return zpt::make_family(zpt::ChordedCycleSpec{n, 2, 1, n / 2 + 1}); }

void BM_BuildCover(benchmark::State& state) {
  auto g = chorded(9);
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zpt::build_cover(g.graph, g.ramification, {}, 3, n));
}
BENCHMARK(BM_BuildCover)->DenseRange(1, 4);

void BM_CoverKappa(benchmark::State& state) {
  auto g = chorded(9);
  auto c = zpt::build_cover(g.graph, g.ramification, {}, 3, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(zpt::kappa(c.graph));
  state.SetLabel(std::to_string(c.graph.vertex_count()) + " vertices");
}
BENCHMARK(BM_CoverKappa)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state) {
  auto g = zpt::make_family(zpt::CompleteSpec{static_cast<unsigned>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(zpt::decompose(g.graph, g.ramification));
}
BENCHMARK(BM_Decompose)->DenseRange(4, 7);

void BM_CharElement(benchmark::State& state) {
  auto g = chorded(static_cast<unsigned>(state.range(0)));
  zpt::VoltageAssignment a{{"c", 1}, {"e3", -2}};
  for (auto _ : state) benchmark::DoNotOptimize(zpt::char_element(g.graph, g.ramification, a, 3));
}
BENCHMARK(BM_CharElement)->DenseRange(6, 12, 3);

}  // namespace

BENCHMARK_MAIN();
