#include <doctest.h>

#include <stdexcept>

#include "nonrep/corpus.hpp"
#include "nonrep/error.hpp"
#include "oracles.hpp"

using namespace nonrep;

TEST_CASE("k-trees carry valid decompositions") {
  Rng rng(1);
  for (std::size_t k = 1; k <= 4; ++k) {
    for (std::size_t n : {1u, 3u, 5u, 20u}) {
      DecomposedGraph d = random_k_tree(n, k, rng);
      CHECK(d.graph.num_vertices() == n);
      CHECK_FALSE(validate_td(d.graph, d.td).has_value());
      CHECK(width(d.td) == std::min(k, n - 1));
      if (n > k) {
        // k-tree edge count: C(k+1, 2) + (n - k - 1) * k.
        CHECK(d.graph.num_edges() == k * (k + 1) / 2 + (n - k - 1) * k);
      } else {
        CHECK(d.graph == complete_graph(n));
      }
      CHECK(is_chordal(d.graph));
    }
  }
}

TEST_CASE("partial k-trees") {
  Rng rng(2);
  DecomposedGraph full = random_partial_k_tree(12, 3, 1.0, rng);
  CHECK(full.graph.num_edges() == 6 + 8 * 3);
  DecomposedGraph none = random_partial_k_tree(12, 3, 0.0, rng);
  CHECK(none.graph.num_edges() == 0);
  CHECK_FALSE(validate_td(none.graph, none.td).has_value());
  for (int i = 0; i < 10; ++i) {
    DecomposedGraph d = random_partial_k_tree(8, 2, 0.5, rng);
    CHECK_FALSE(validate_td(d.graph, d.td).has_value());
    CHECK(oracle::treewidth_by_permutations(d.graph) <= 2);
  }
}

TEST_CASE("seeds reproduce instances") {
  Rng a(77), b(77);
  CHECK(random_k_tree(30, 3, a).graph == random_k_tree(30, 3, b).graph);
  CHECK(random_triangulation(25, a).faces() == random_triangulation(25, b).faces());
}

TEST_CASE("random chordal graphs are connected") {
  Rng rng(3);
  for (std::size_t n = 1; n <= 25; ++n) {
    Graph g = random_connected_chordal(n, rng);
    CHECK(g.num_vertices() == n);
    CHECK(connected_components(g).size() == 1);
    CHECK(is_chordal(g));
  }
}

TEST_CASE("triangulations") {
  CHECK(tetrahedron().graph() == complete_graph(4));
  CHECK(octahedron().graph().num_vertices() == 6);
  CHECK(octahedron().graph().num_edges() == 12);
  CHECK(icosahedron().graph().num_vertices() == 12);
  for (Vertex v = 0; v < 12; ++v) CHECK(icosahedron().graph().degree(v) == 5);
  Rng rng(4);
  for (std::size_t n = 4; n <= 40; ++n) {
    PlaneTriangulation t = random_triangulation(n, rng);
    CHECK(t.graph().num_vertices() == n);
    CHECK(t.graph().num_edges() == 3 * n - 6);
    CHECK(t.faces().size() == 2 * n - 4);
  }
  CHECK_THROWS_AS(random_triangulation(3, rng), std::invalid_argument);
}

TEST_CASE("connected graph enumeration") {
  // Connected graphs up to isomorphism on 1..7 vertices (OEIS A001349).
  const std::size_t counts[] = {1, 1, 2, 6, 21, 112, 853};
  const auto graphs = connected_graphs(7);
  std::size_t per_n[8] = {};
  for (const Graph& g : graphs) {
    CHECK(connected_components(g).size() == 1);
    ++per_n[g.num_vertices()];
  }
  for (std::size_t n = 1; n <= 7; ++n) CHECK(per_n[n] == counts[n - 1]);
  CHECK(graphs.size() == 996);
  for (std::size_t i = 1; i < graphs.size(); ++i) {
    CHECK(graphs[i - 1].num_vertices() <= graphs[i].num_vertices());
  }
  CHECK_THROWS_AS(connected_graphs(9), LimitError);
}
