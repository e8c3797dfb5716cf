#include "nonrep/corpus.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "nonrep/error.hpp"

namespace nonrep {
namespace {

std::size_t pick(std::size_t size, Rng& rng) {
  return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
}

// Subsets of `bag` of size |bag| - 1 that contain `keep` (all of them if
// keep == kNoVertex).
std::vector<VertexSet> facets(const VertexSet& bag, Vertex keep) {
  std::vector<VertexSet> out;
  for (std::size_t drop = 0; drop < bag.size(); ++drop) {
    if (bag[drop] == keep) continue;
    VertexSet f;
    for (std::size_t i = 0; i < bag.size(); ++i) {
      if (i != drop) f.push_back(bag[i]);
    }
    out.push_back(std::move(f));
  }
  return out;
}

using Code = std::uint64_t;

Code code_of(const Graph& g, const std::vector<Vertex>& order) {
  const std::size_t n = order.size();
  Code c = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g.adjacent(order[i], order[j])) c |= Code{1} << (i * n + j);
    }
  }
  return c;
}

// Least code over the relabellings that list vertices by increasing degree.
Code canonical_code(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  std::vector<std::pair<std::size_t, std::size_t>> classes;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && g.degree(order[j]) == g.degree(order[i])) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  Code best = ~Code{0};
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == classes.size()) {
      best = std::min(best, code_of(g, order));
      return;
    }
    auto first = order.begin() + static_cast<std::ptrdiff_t>(classes[c].first);
    auto last = order.begin() + static_cast<std::ptrdiff_t>(classes[c].second);
    std::sort(first, last);
    do {
      rec(c + 1);
    } while (std::next_permutation(first, last));
  };
  rec(0);
  return best;
}

Graph graph_of_code(std::size_t n, Code c) {
  GraphBuilder b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (c >> (i * n + j) & 1) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return std::move(b).build();
}

}  // namespace

DecomposedGraph random_k_tree(std::size_t n, std::size_t k, Rng& rng) {
  DecomposedGraph out;
  if (n == 0) return out;
  if (k == 0) {
    out.graph = Graph(n);
    out.td = heuristic_td(out.graph);
    return out;
  }
  const std::size_t base = std::min(n, k + 1);
  VertexSet first(base);
  std::iota(first.begin(), first.end(), 0);
  GraphBuilder b(n);
  b.add_clique(first);
  out.td.bags.push_back(first);
  std::vector<std::pair<VertexSet, TreeNode>> cliques;
  if (n > base) {
    for (auto& f : facets(first, kNoVertex)) cliques.emplace_back(std::move(f), 0);
  }
  for (Vertex v = static_cast<Vertex>(base); v < n; ++v) {
    const auto& [clique, node] = cliques[pick(cliques.size(), rng)];
    VertexSet bag = clique;
    for (Vertex w : clique) b.add_edge(v, w);
    bag.push_back(v);
    const TreeNode id = out.td.bags.size();
    out.td.tree_edges.emplace_back(node, id);
    out.td.bags.push_back(bag);
    for (auto& f : facets(bag, v)) cliques.emplace_back(std::move(f), id);
  }
  out.graph = std::move(b).build();
  return out;
}

DecomposedGraph random_partial_k_tree(std::size_t n, std::size_t k, double keep, Rng& rng) {
  DecomposedGraph full = random_k_tree(n, k, rng);
  std::bernoulli_distribution coin(keep);
  GraphBuilder b(n);
  for (Edge e : full.graph.edges()) {
    if (coin(rng)) b.add_edge(e.u, e.v);
  }
  full.graph = std::move(b).build();
  return full;
}

Graph random_connected_chordal(std::size_t n, Rng& rng) {
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) b.add_edge(v, static_cast<Vertex>(pick(v, rng)));
  const double p = std::uniform_real_distribution<double>(0.05, 0.35)(rng);
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) b.add_edge(u, v);
    }
  }
  Graph g = std::move(b).build();
  return chordal_completion(g, heuristic_td(g));
}

PlaneTriangulation random_triangulation(std::size_t n, Rng& rng) {
  if (n < 4) throw std::invalid_argument("random_triangulation needs n >= 4");
  std::vector<Face> faces = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (Vertex v = 4; v < n; ++v) {
    const std::size_t f = pick(faces.size(), rng);
    const Face old = faces[f];
    faces[f] = {old[0], old[1], v};
    faces.push_back({old[0], old[2], v});
    faces.push_back({old[1], old[2], v});
  }
  std::set<Edge> edges;
  std::vector<std::size_t> degree(n, 0);
  auto key = [](Vertex a, Vertex b) { return Edge{std::min(a, b), std::max(a, b)}; };
  for (const Face& f : faces) {
    for (int i = 0; i < 3; ++i) {
      if (edges.insert(key(f[i], f[(i + 1) % 3])).second) {
        ++degree[f[i]];
        ++degree[f[(i + 1) % 3]];
      }
    }
  }
  for (std::size_t round = 0; round < 2 * n; ++round) {
    const std::size_t fi = pick(faces.size(), rng);
    const std::size_t side = pick(3, rng);
    const Vertex u = faces[fi][side];
    const Vertex v = faces[fi][(side + 1) % 3];
    const Vertex w = faces[fi][(side + 2) % 3];
    std::size_t fj = faces.size();
    Vertex x = kNoVertex;
    for (std::size_t j = 0; j < faces.size(); ++j) {
      if (j == fi) continue;
      const Face& f = faces[j];
      const bool has_u = std::find(f.begin(), f.end(), u) != f.end();
      const bool has_v = std::find(f.begin(), f.end(), v) != f.end();
      if (has_u && has_v) {
        fj = j;
        for (Vertex y : f) {
          if (y != u && y != v) x = y;
        }
        break;
      }
    }
    if (fj == faces.size() || edges.contains(key(w, x)) || degree[u] <= 3 || degree[v] <= 3) {
      continue;
    }
    edges.erase(key(u, v));
    edges.insert(key(w, x));
    --degree[u];
    --degree[v];
    ++degree[w];
    ++degree[x];
    faces[fi] = {u, w, x};
    faces[fj] = {v, w, x};
  }
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  for (Face& f : faces) {
    for (Vertex& v : f) v = label[v];
  }
  return PlaneTriangulation::from_faces(n, std::move(faces));
}

PlaneTriangulation tetrahedron() {
  return PlaneTriangulation::from_faces(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

PlaneTriangulation octahedron() {
  return PlaneTriangulation::from_faces(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1},
                                            {5, 1, 2}, {5, 2, 3}, {5, 3, 4}, {5, 4, 1}});
}

PlaneTriangulation icosahedron() {
  // Apex 0, upper ring 1..5, lower ring 6..10, apex 11.
  std::vector<Face> faces;
  for (Vertex i = 0; i < 5; ++i) {
    const Vertex j = (i + 1) % 5;
    faces.push_back({0, 1 + i, 1 + j});
    faces.push_back({11, 6 + i, 6 + j});
    faces.push_back({1 + i, 1 + j, 6 + i});
    faces.push_back({6 + i, 6 + j, 1 + j});
  }
  return PlaneTriangulation::from_faces(12, std::move(faces));
}

std::vector<Graph> connected_graphs(std::size_t max_n) {
  if (max_n > 8) throw LimitError("connected_graphs is limited to 8 vertices");
  std::vector<Graph> out;
  if (max_n == 0) return out;
  std::vector<Graph> level{Graph(1)};
  out.push_back(level.front());
  for (std::size_t n = 2; n <= max_n; ++n) {
    std::set<Code> seen;
    for (const Graph& g : level) {
      const auto base = g.edges();
      for (std::uint32_t subset = 1; subset < (1u << (n - 1)); ++subset) {
        GraphBuilder b(n);
        for (Edge e : base) b.add_edge(e.u, e.v);
        for (Vertex v = 0; v + 1 < n; ++v) {
          if (subset >> v & 1) b.add_edge(v, static_cast<Vertex>(n - 1));
        }
        seen.insert(canonical_code(std::move(b).build()));
      }
    }
    level.clear();
    for (Code c : seen) level.push_back(graph_of_code(n, c));
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace nonrep
