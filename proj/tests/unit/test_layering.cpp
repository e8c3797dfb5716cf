#include <doctest.h>

#include <stdexcept>

#include "nonrep/corpus.hpp"
#include "nonrep/layering.hpp"

using namespace nonrep;

TEST_CASE("bfs_layering on small graphs") {
  CHECK(bfs_layering(path_graph(1), 0).layers() == std::vector<VertexSet>{{0}});
  CHECK(bfs_layering(path_graph(4), 0).layers() ==
        std::vector<VertexSet>{{0}, {1}, {2}, {3}});
  CHECK(bfs_layering(path_graph(5), 2).layers() == std::vector<VertexSet>{{2}, {1, 3}, {0, 4}});
  const Layering c6 = bfs_layering(cycle_graph(6), 0);
  CHECK(c6.layers() == std::vector<VertexSet>{{0}, {1, 5}, {2, 4}, {3}});
  CHECK(c6.depth(3) == 3);
  CHECK(c6.depth(5) == 1);
  CHECK(c6.depth(99) == Layering::kNoDepth);
}

TEST_CASE("bfs_layering rejects bad input") {
  Graph two = Graph::from_edges(2, std::vector<Edge>{});
  CHECK_THROWS_AS(bfs_layering(two, 0), std::invalid_argument);
  CHECK_THROWS_AS(bfs_layering(path_graph(3), 3), std::invalid_argument);
}

TEST_CASE("validate_layering") {
  const Graph p3 = path_graph(3);
  CHECK_FALSE(validate_layering(p3, Layering({{0}, {1}, {2}})).has_value());
  CHECK_FALSE(validate_layering(p3, Layering({{1}, {0, 2}})).has_value());
  // 0 and 1 are two layers apart.
  auto bad = validate_layering(p3, Layering({{0}, {2}, {1}}));
  REQUIRE(bad.has_value());
  CHECK(*bad == Edge{0, 1});
  // Edges inside a layer are allowed.
  CHECK_FALSE(validate_layering(complete_graph(3), Layering({{0, 1, 2}})).has_value());

  CHECK_THROWS_AS(validate_layering(p3, Layering({{0}, {1}})), std::invalid_argument);
  CHECK_THROWS_AS(validate_layering(p3, Layering({{0, 1}, {1, 2}})), std::invalid_argument);
}

TEST_CASE("shadows of cycles") {
  const Graph c6 = cycle_graph(6);
  const Layering l6 = bfs_layering(c6, 0);
  const auto s6 = shadows(c6, l6);
  REQUIRE(s6.size() == 3);
  CHECK(s6[0].layer == 1);
  CHECK(s6[0].component == VertexSet{1, 2, 3, 4, 5});
  CHECK(s6[0].shadow == VertexSet{0});
  CHECK(s6[1].layer == 2);
  CHECK(s6[1].component == VertexSet{2, 3, 4});
  CHECK(s6[1].shadow == VertexSet{1, 5});
  CHECK(s6[2].component == VertexSet{3});
  CHECK(s6[2].shadow == VertexSet{2, 4});

  auto defect = find_incomplete_shadow(c6, l6);
  REQUIRE(defect.has_value());
  CHECK(defect->shadow.layer == 2);
  CHECK(defect->u == 1);
  CHECK(defect->v == 5);

  // Triangle: every shadow is a single vertex or an edge.
  CHECK(is_shadow_complete(complete_graph(3), bfs_layering(complete_graph(3), 0)));
  CHECK_FALSE(is_shadow_complete(cycle_graph(4), bfs_layering(cycle_graph(4), 0)));
}

TEST_CASE("shadows split by component") {
  // Star with centre 0: V_1 = {1, 2, 3} falls apart into three components.
  const Graph star = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
  const auto s = shadows(star, bfs_layering(star, 0));
  REQUIRE(s.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(s[i].layer == 1);
    CHECK(s[i].component == VertexSet{static_cast<Vertex>(i + 1)});
    CHECK(s[i].shadow == VertexSet{0});
  }
}

TEST_CASE("BFS layerings of chordal graphs are shadow-complete") {
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_connected_chordal(5 + trial % 30, rng);
    for (Vertex root : {Vertex{0}, static_cast<Vertex>(g.num_vertices() - 1)}) {
      const Layering l = bfs_layering(g, root);
      CHECK_FALSE(validate_layering(g, l).has_value());
      CHECK(is_shadow_complete(g, l));
    }
  }
}
