#include <benchmark/benchmark.h>

#include "nonrep/corpus.hpp"
#include "nonrep/planar_structure.hpp"
#include "nonrep/tree_decomposition.hpp"

using namespace nonrep;

static void BM_ComputeProductStructure(benchmark::State& state) {
  Rng rng(5);
  const PlaneTriangulation t = random_triangulation(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(compute_product_structure(t));
}
BENCHMARK(BM_ComputeProductStructure)->Arg(60)->Arg(500);

static void BM_PlanarPipeline(benchmark::State& state) {
  Rng rng(6);
  const PlaneTriangulation t = random_triangulation(static_cast<std::size_t>(state.range(0)), rng);
  const ProductStructure s = compute_product_structure(t);
  for (auto _ : state) benchmark::DoNotOptimize(colour_planar(t.graph(), s));
}
BENCHMARK(BM_PlanarPipeline)->Arg(60)->Arg(500);

static void BM_ExactTreewidthOfH(benchmark::State& state) {
  Rng rng(7);
  const PlaneTriangulation t = random_triangulation(static_cast<std::size_t>(state.range(0)), rng);
  const ProductStructure s = compute_product_structure(t);
  if (s.h.num_vertices() > kMaxTreewidthBudget) {
    state.SkipWithError("H exceeds the exact treewidth budget");
    return;
  }
  for (auto _ : state) benchmark::DoNotOptimize(exact_treewidth(s.h, kMaxTreewidthBudget));
}
BENCHMARK(BM_ExactTreewidthOfH)->Arg(30)->Arg(60);

static void BM_HeuristicTd(benchmark::State& state) {
  Rng rng(8);
  const Graph g = random_partial_k_tree(static_cast<std::size_t>(state.range(0)), 4, 0.8, rng).graph;
  for (auto _ : state) benchmark::DoNotOptimize(heuristic_td(g));
}
BENCHMARK(BM_HeuristicTd)->Arg(100)->Arg(1000);

static void BM_ExactTreewidthGrid(benchmark::State& state) {
  const std::size_t side = static_cast<std::size_t>(state.range(0));
  GraphBuilder b(side * side);
  for (Vertex r = 0; r < side; ++r) {
    for (Vertex c = 0; c < side; ++c) {
      if (c + 1 < side) b.add_edge(r * side + c, r * side + c + 1);
      if (r + 1 < side) b.add_edge(r * side + c, (r + 1) * side + c);
    }
  }
  const Graph g = std::move(b).build();
  for (auto _ : state) benchmark::DoNotOptimize(exact_treewidth(g));
}
BENCHMARK(BM_ExactTreewidthGrid)->Arg(4)->Arg(5);
