#include <benchmark/benchmark.h>

#include <vector>

#include "ontolab/equilibrium.hpp"
#include "ontolab/grid_condenser.hpp"

namespace {

using namespace ontolab;

std::vector<Arc> spread_arcs(int count) {
  std::vector<Arc> arcs;
  for (int k = 0; k < count; ++k) {
    arcs.emplace_back(Turns::from_fraction(static_cast<long double>(k) / count),
                      0.3L / count);
  }
  return arcs;
}

void BM_LogCapacity(benchmark::State& state) {
  const auto arcs = spread_arcs(static_cast<int>(state.range(0)));
  const int modes = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(log_capacity(arcs, modes));
}
BENCHMARK(BM_LogCapacity)
    ->Args({1, 16})
    ->Args({4, 16})
    ->Args({16, 16})
    ->Args({4, 64})
    ->Unit(benchmark::kMicrosecond);

void BM_GridCondenser(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const CondenserSpec spec{HyperbolicDisc{DiscPoint::from_polar(0.4, 1.0), 1.0},
                           spread_arcs(3)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(grid_condenser_capacity(spec, {r, 2 * r}).energy);
  }
  state.counters["cells"] = 2.0 * r * r;
}
BENCHMARK(BM_GridCondenser)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace
