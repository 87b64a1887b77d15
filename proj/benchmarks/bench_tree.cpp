#include <benchmark/benchmark.h>

#include "ontolab/bergman_tree.hpp"

namespace {

using namespace ontolab;

void BM_CombRecursive(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  const auto c = comb_condenser(CombSpec{node_near(m * m, 0.25L)});
  for (auto _ : state) benchmark::DoNotOptimize(tree_capacity_recursive(c));
  state.SetLabel("N=" + std::to_string(m * m));
}
BENCHMARK(BM_CombRecursive)->Arg(4)->Arg(10)->Arg(30)->Arg(60);

void BM_CombExact(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  const auto c = comb_condenser(CombSpec{node_near(m * m, 0.25L)});
  for (auto _ : state) benchmark::DoNotOptimize(tree_capacity_exact(c));
  state.counters["nodes"] = static_cast<double>(path_union_size(c));
}
BENCHMARK(BM_CombExact)->Arg(4)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_CombClosedForm(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(comb_capacity_closed_form(n));
}
BENCHMARK(BM_CombClosedForm)->Arg(16)->Arg(3600);

void BM_CombSweep(benchmark::State& state) {
  for (auto _ : state) {
    double acc = 0;
    for (unsigned m = 2; m <= 60; ++m) {
      acc += tree_capacity_recursive(comb_condenser(CombSpec{node_near(m * m, 0.0L)}));
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_CombSweep)->Unit(benchmark::kMillisecond);

}  // namespace
