#include <benchmark/benchmark.h>

#include "ontolab/checkers.hpp"
#include "ontolab/disc_geometry.hpp"
#include "ontolab/generators.hpp"

namespace {

using namespace ontolab;

void BM_HarmonicMeasure(benchmark::State& state) {
  const DiscPoint z = DiscPoint::from_polar(0.9, 2.0);
  const Arc arc = Arc::from_radians(1.0, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(harmonic_measure(z, arc));
}
BENCHMARK(BM_HarmonicMeasure);

void BM_DeepMobius(benchmark::State& state) {
  const auto seq = generate_comb(static_cast<unsigned>(state.range(0)), 0.2L);
  for (auto _ : state) benchmark::DoNotOptimize(mobius(seq[0], seq[1]));
}
BENCHMARK(BM_DeepMobius)->Arg(4)->Arg(30);

void BM_MergeArcs(benchmark::State& state) {
  std::vector<Arc> arcs;
  for (int k = 0; k < state.range(0); ++k) {
    arcs.emplace_back(Turns::from_fraction(0.37L * k), 0.01L);
  }
  for (auto _ : state) benchmark::DoNotOptimize(merge_arcs(arcs));
}
BENCHMARK(BM_MergeArcs)->Arg(8)->Arg(64);

void BM_Vicinity(benchmark::State& state) {
  DisjointBoxesParams p;
  p.count = static_cast<unsigned>(state.range(0));
  p.eta = 0.75;
  const auto seq = generate_disjoint_boxes(p);
  for (auto _ : state) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) total += vicinity(seq, i, 0.75).size();
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_Vicinity)->Arg(20)->Arg(80);

void BM_CapacitaryCheckComb(benchmark::State& state) {
  const auto seq = generate_comb(static_cast<unsigned>(state.range(0)), 0.2L);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_capacitary_condition(seq, CheckParams{}, 16).sup_ratio);
  }
}
BENCHMARK(BM_CapacitaryCheckComb)->Arg(4)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace
