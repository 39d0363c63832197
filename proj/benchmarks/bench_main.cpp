#include <benchmark/benchmark.h>

#include "drunkcop/drunkcop.hpp"

namespace {

using namespace drunkcop;

void BM_BuildWithDistances(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph src = lollipop(n, 1.0);
  const auto edges = src.edges();
  for (auto _ : state) {
    Graph g = Graph::build(n, edges, DistanceCache::kAlways);
    benchmark::DoNotOptimize(g.diameter());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_BuildWithDistances)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void BM_PlayGame(benchmark::State& state, const char* policy) {
  const int n = static_cast<int>(state.range(0));
  const FamilyInstance inst = make_family(FamilySpec::parse("ladder:n=" + std::to_string(n)));
  const PolicyFactory factory(inst.graph, PolicySpec::parse(policy));
  GameConfig cfg;
  cfg.cop_start = inst.cop_start;
  cfg.drunk_start = inst.drunk_start;
  std::uint64_t trial = 0;
  std::int64_t moves = 0;
  for (auto _ : state) {
    auto cop = factory.make();
    Rng rng(derive_seed(7, trial++));
    moves += play_game(inst.graph, *cop, cfg, rng).capture_time;
  }
  state.counters["moves/game"] =
      benchmark::Counter(static_cast<double>(moves), benchmark::Counter::kAvgIterations);
}
BENCHMARK_CAPTURE(BM_PlayGame, greedy_lex, "greedy:lex")->Arg(40)->Arg(80)->Arg(160);
BENCHMARK_CAPTURE(BM_PlayGame, smart, "smart")->Arg(40)->Arg(80)->Arg(160);

void BM_MonteCarlo(benchmark::State& state) {
  const Graph g = path(100);
  GameConfig cfg;
  cfg.drunk_start = 99;
  const auto spec = PolicySpec::parse("smart");
  for (auto _ : state) {
    benchmark::DoNotOptimize(monte_carlo(g, spec, cfg, 1000, 1, 1).mean);
  }
}
BENCHMARK(BM_MonteCarlo)->Unit(benchmark::kMillisecond);

void BM_ExactGreedy(benchmark::State& state) {
  const Graph g = complete_bipartite(static_cast<int>(state.range(0)),
                                     static_cast<int>(state.range(0)));
  const auto spec = PolicySpec::parse("greedy:lex");
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_expected_capture(g, spec).max_value());
  }
}
BENCHMARK(BM_ExactGreedy)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_OptimalValues(benchmark::State& state) {
  const Graph g = projective_incidence(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimal_capture_values(g).max_value());
  }
}
BENCHMARK(BM_OptimalValues)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_HittingTable(benchmark::State& state) {
  const Graph g = lollipop(static_cast<int>(state.range(0)), 1.0);
  for (auto _ : state) {
    HittingTimeTable table(g);
    benchmark::DoNotOptimize(table(0, 1));
  }
}
BENCHMARK(BM_HittingTable)->Arg(64)->Arg(216)->Unit(benchmark::kMillisecond);

void BM_FourLemmaExhaustive(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(four_lemma_check(n, 1).worst_margin);
  }
}
BENCHMARK(BM_FourLemmaExhaustive)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
