#include <doctest.h>

#include <stdexcept>

#include "nonrep/corpus.hpp"
#include "nonrep/error.hpp"
#include "nonrep/tw_colouring.hpp"
#include "nonrep/verify.hpp"
#include "nonrep/words.hpp"
#include "oracles.hpp"

using namespace nonrep;

namespace {

TreeDecomposition path_td(std::size_t n) {
  TreeDecomposition td;
  for (Vertex i = 0; i + 1 < n; ++i) {
    td.bags.push_back({i, i + 1});
    if (i > 0) td.tree_edges.emplace_back(i - 1, i);
  }
  return td;
}

void check_strong(const Graph& g, const Colouring& c, std::size_t max_walk = 10) {
  CHECK(is_proper(g, c).pass);
  CHECK(find_repetitive_path(g, c, 2 * (g.num_vertices() / 2) + 2).pass);
  CHECK(find_bad_lazy_walk(g, c, max_walk).pass);
}

}  // namespace

TEST_CASE("trivial inputs") {
  Colouring one = strongly_nonrepetitive_colouring(path_graph(1), TreeDecomposition{{{0}}, {}});
  CHECK(one.colours == std::vector<Colour>{0});
  CHECK(one.palette == 1);
  Colouring edgeless = strongly_nonrepetitive_colouring(Graph(3), TreeDecomposition{{{0}, {1}, {2}}, {{0, 1}, {1, 2}}});
  CHECK(edgeless.colours == std::vector<Colour>{0, 0, 0});
  Colouring empty = strongly_nonrepetitive_colouring(Graph(), TreeDecomposition{});
  CHECK(empty.colours.empty());
}

TEST_CASE("paths get the boring path colouring") {
  for (std::size_t n : {2u, 10u, 57u}) {
    Colouring c = strongly_nonrepetitive_colouring(path_graph(n), path_td(n));
    CHECK(c.palette == 4);
    CHECK(c.colours == path_colouring_4(n).colours);
  }
}

TEST_CASE("K4 gets four distinct colours") {
  Colouring c = strongly_nonrepetitive_colouring(complete_graph(4), TreeDecomposition{{{0, 1, 2, 3}}, {}});
  CHECK(c.palette == 64);
  CHECK(c.distinct_count() == 4);
  c.check();
}

TEST_CASE("layer_td") {
  const Graph k4 = complete_graph(4);
  const TreeDecomposition td{{{0, 1, 2, 3}}, {}};
  const Layering layers = bfs_layering(k4, 0);
  CHECK(layer_td(k4, td, layers, 0).bags == std::vector<VertexSet>{{0}});
  TreeDecomposition inner = layer_td(k4, td, layers, 1);
  CHECK(inner.bags == std::vector<VertexSet>{{0, 1, 2}});
  CHECK_THROWS_AS(layer_td(k4, td, layers, 2), std::invalid_argument);

  // Fan: 0 joined to the path 1..5, bags {0, i, i+1}.
  GraphBuilder b(6);
  TreeDecomposition fan_td;
  for (Vertex i = 1; i <= 5; ++i) {
    b.add_edge(0, i);
    if (i < 5) {
      b.add_edge(i, i + 1);
      fan_td.bags.push_back({0, i, i + 1});
      if (i > 1) fan_td.tree_edges.emplace_back(i - 2, i - 1);
    }
  }
  const Graph fan = std::move(b).build();
  const Layering fan_layers = bfs_layering(fan, 0);
  TreeDecomposition rim = layer_td(fan, fan_td, fan_layers, 1);
  CHECK(width(rim) == 1);
  CHECK_FALSE(validate_td(path_graph(5), rim).has_value());
}

TEST_CASE("fan and k-trees pass the verifiers") {
  Rng rng(5);
  for (std::size_t k = 1; k <= 3; ++k) {
    for (int trial = 0; trial < 8; ++trial) {
      DecomposedGraph d = random_partial_k_tree(14, k, trial % 2 ? 0.6 : 1.0, rng);
      Colouring c = strongly_nonrepetitive_colouring(d.graph, d.td);
      CHECK(c.palette == Colour{1} << (2 * k));
      c.check();
      check_strong(d.graph, c, 8);
    }
  }
}

TEST_CASE("every connected graph on at most 6 vertices") {
  for (const Graph& g : connected_graphs(6)) {
    const TreeDecomposition td = heuristic_td(g);
    const Colouring c = strongly_nonrepetitive_colouring(g, td);
    CHECK(c.palette == Colour{1} << (2 * width(td)));
    CHECK_FALSE(oracle::has_repetitive_path(g, c, g.num_vertices()));
    CHECK_FALSE(oracle::has_bad_lazy_walk(g, c, 6));
    CHECK(find_bad_lazy_walk(g, c, 10).pass);
  }
}

TEST_CASE("disconnected input colours each component") {
  const Graph g = Graph::from_edges(5, std::vector<Edge>{{0, 1}, {1, 2}, {3, 4}});
  const TreeDecomposition td{{{0, 1}, {1, 2}, {3, 4}}, {{0, 1}, {1, 2}}};
  Colouring c = strongly_nonrepetitive_colouring(g, td);
  check_strong(g, c);
}

TEST_CASE("deterministic") {
  Rng rng(9);
  DecomposedGraph d = random_k_tree(40, 3, rng);
  CHECK(strongly_nonrepetitive_colouring(d.graph, d.td) ==
        strongly_nonrepetitive_colouring(d.graph, d.td));
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(strongly_nonrepetitive_colouring(path_graph(3), TreeDecomposition{{{0, 1}}, {}}),
                  std::invalid_argument);
  const Graph k33 = complete_graph(33);
  VertexSet all(33);
  for (Vertex v = 0; v < 33; ++v) all[v] = v;
  CHECK_THROWS_AS(strongly_nonrepetitive_colouring(k33, TreeDecomposition{{all}, {}}), LimitError);
}
