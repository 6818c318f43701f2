#include <benchmark/benchmark.h>

#include <vector>

#include "rgconj/backforth.hpp"
#include "rgconj/choice_set.hpp"
#include "rgconj/delta.hpp"
#include "rgconj/dlo.hpp"
#include "rgconj/graph_reduction.hpp"
#include "rgconj/pairing.hpp"
#include "rgconj/rado.hpp"
#include "rgconj/rational.hpp"

namespace {

using namespace rgconj;

void BM_ChoiceSetRoundTrip(benchmark::State& state) {
  const Nat i = static_cast<Nat>(state.range(0));
  Nat n = 0;
  for (auto _ : state) {
    const ChoiceSet s = choice_set(i, n);
    benchmark::DoNotOptimize(choice_index(s));
    n = (n + 7919) % 100000;
  }
}
BENCHMARK(BM_ChoiceSetRoundTrip)->Arg(2)->Arg(3)->Arg(5);

void BM_SwapCodes(benchmark::State& state) {
  const Nat limit = static_cast<Nat>(state.range(0));
  for (auto _ : state) {
    VertexPool pool(true, [](Nat j) { return j; });
    for (Nat code = 0; code < limit; ++code) benchmark::DoNotOptimize(pool.image(VertexPool::coded(unpair(code))));
  }
}
BENCHMARK(BM_SwapCodes)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_RadoWitness(benchmark::State& state) {
  const std::vector<Nat> U{0, 3, 7, 12, 40};
  const std::vector<Nat> V{1, 2, 9, 33};
  for (auto _ : state) benchmark::DoNotOptimize(rado_witness(U, V));
}
BENCHMARK(BM_RadoWitness);

void BM_RationalIndexRoundTrip(benchmark::State& state) {
  Nat k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rational_index(cw_rational(k)));
    k = (k + 1) % 100000;
  }
}
BENCHMARK(BM_RationalIndexRoundTrip);

void BM_DloReducePrefix(benchmark::State& state) {
  const auto x = OrderOracle::finite({2, 0, 1, 3});
  for (auto _ : state) {
    const StagedMap phi = dlo_reduce(x);
    benchmark::DoNotOptimize(phi.stage(static_cast<Stage>(state.range(0))));
  }
}
BENCHMARK(BM_DloReducePrefix)->Arg(100)->Arg(500);

void BM_GraphReduceStage(benchmark::State& state) {
  const auto x = GraphOracle::finite(3, {{0, 1}, {1, 2}});
  for (auto _ : state) {
    const StagedMap phi = graph_reduce(x);
    benchmark::DoNotOptimize(phi.stage(static_cast<Stage>(state.range(0))));
  }
}
BENCHMARK(BM_GraphReduceStage)->Arg(4)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
