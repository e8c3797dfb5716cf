#include <benchmark/benchmark.h>

#include "nonrep/corpus.hpp"
#include "nonrep/tw_colouring.hpp"
#include "nonrep/verify.hpp"
#include "nonrep/words.hpp"

using namespace nonrep;

static void BM_VerifyBoring(benchmark::State& state) {
  const Colouring c = path_colouring_4(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_boring(c, 14));
}
BENCHMARK(BM_VerifyBoring)->Arg(30)->Arg(60)->Arg(240);

static void BM_RepetitivePathKTree(benchmark::State& state) {
  Rng rng(1);
  const DecomposedGraph d = random_partial_k_tree(static_cast<std::size_t>(state.range(0)), 3, 0.75, rng);
  const Colouring c = strongly_nonrepetitive_colouring(d.graph, d.td);
  for (auto _ : state) benchmark::DoNotOptimize(find_repetitive_path(d.graph, c, 12));
}
BENCHMARK(BM_RepetitivePathKTree)->Arg(30)->Arg(120);

static void BM_BadLazyWalkKTree(benchmark::State& state) {
  Rng rng(1);
  const DecomposedGraph d = random_partial_k_tree(static_cast<std::size_t>(state.range(0)), 3, 0.75, rng);
  const Colouring c = strongly_nonrepetitive_colouring(d.graph, d.td);
  for (auto _ : state) benchmark::DoNotOptimize(find_bad_lazy_walk(d.graph, c, 10));
}
BENCHMARK(BM_BadLazyWalkKTree)->Arg(30)->Arg(120);

static void BM_ExactPiPath(benchmark::State& state) {
  const Graph p = path_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exact_pi(p));
}
BENCHMARK(BM_ExactPiPath)->Arg(6)->Arg(10);
