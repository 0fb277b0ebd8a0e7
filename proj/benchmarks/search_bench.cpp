#include <benchmark/benchmark.h>

#include "circlab/chromatic.hpp"
#include "circlab/families.hpp"
#include "circlab/free_chromatic.hpp"
#include "circlab/hom_search.hpp"

namespace {

using namespace circlab;

void BM_ChromaticKneser(benchmark::State& state) {
  const Graph g = kneser(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g).value);
  state.SetLabel(g.provenance()->name());
}
BENCHMARK(BM_ChromaticKneser)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_CircularChromatic(benchmark::State& state) {
  static const char* const names[] = {"C7", "KG(5,2)", "M(K3)", "M^2(K2)", "KG(7,3)"};
  const Graph g = build_family(std::string_view(names[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(circular_chromatic_number(g).value);
  state.SetLabel(names[state.range(0)]);
}
BENCHMARK(BM_CircularChromatic)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_IndependenceNumber(benchmark::State& state) {
  const Graph g = generalized_kneser(static_cast<int>(state.range(0)), 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(independence_number(g));
  state.SetLabel(g.provenance()->name());
}
BENCHMARK(BM_IndependenceNumber)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

void BM_FreeChromatic(benchmark::State& state) {
  static const char* const names[] = {"C5", "C7", "K2xK4", "KG(5,2)", "M(C5)"};
  const Graph g = build_family(std::string_view(names[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(free_chromatic_number(g).value);
  state.SetLabel(names[state.range(0)]);
}
BENCHMARK(BM_FreeChromatic)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_AbFreeMycielski(benchmark::State& state) {
  const auto mg = mycielskian(path_graph(4));
  for (auto _ : state) benchmark::DoNotOptimize(ab_free_chromatic_number(mg.graph(), 0, 2).value);
}
BENCHMARK(BM_AbFreeMycielski)->Unit(benchmark::kMillisecond);

void BM_HomPetersenToC5(benchmark::State& state) {
  const Graph p = kneser(5, 2);
  const Graph c5 = cycle_graph(5);
  for (auto _ : state) benchmark::DoNotOptimize(exists_hom(p, c5).status);
}
BENCHMARK(BM_HomPetersenToC5)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
