#include <benchmark/benchmark.h>

#include "nonrep/corpus.hpp"
#include "nonrep/product.hpp"
#include "nonrep/tw_colouring.hpp"
#include "nonrep/words.hpp"

using namespace nonrep;

static void BM_TernarySquarefree(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ternary_squarefree(static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_TernarySquarefree)->Arg(5000)->Arg(1 << 20);

static void BM_FindSquare(benchmark::State& state) {
  const Word w = ternary_squarefree(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_square(w));
}
BENCHMARK(BM_FindSquare)->Arg(1000)->Arg(5000);

static void BM_TreewidthColouring(benchmark::State& state) {
  Rng rng(3);
  const std::size_t k = static_cast<std::size_t>(state.range(1));
  const DecomposedGraph d = random_k_tree(static_cast<std::size_t>(state.range(0)), k, rng);
  for (auto _ : state) benchmark::DoNotOptimize(strongly_nonrepetitive_colouring(d.graph, d.td));
}
BENCHMARK(BM_TreewidthColouring)->Args({100, 2})->Args({1000, 3})->Args({2000, 5});

static void BM_StrongProduct(benchmark::State& state) {
  Rng rng(4);
  const Graph h = random_k_tree(static_cast<std::size_t>(state.range(0)), 3, rng).graph;
  const Graph p = path_graph(50);
  for (auto _ : state) benchmark::DoNotOptimize(strong_product(h, p));
}
BENCHMARK(BM_StrongProduct)->Arg(20)->Arg(200);
