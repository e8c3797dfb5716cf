#include "nonrep/layering.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nonrep {

Layering::Layering(std::vector<VertexSet> layers) : layers_(std::move(layers)) {
  Vertex max_vertex = 0;
  bool any = false;
  for (auto& l : layers_) {
    std::sort(l.begin(), l.end());
    for (Vertex v : l) {
      max_vertex = std::max(max_vertex, v);
      any = true;
    }
  }
  depth_.assign(any ? max_vertex + 1 : 0, kNoDepth);
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    for (std::size_t k = 0; k < layers_[i].size(); ++k) {
      Vertex v = layers_[i][k];
      if (depth_[v] != kNoDepth || (k > 0 && layers_[i][k - 1] == v)) disjoint_ = false;
      depth_[v] = i;
    }
  }
}

Layering bfs_layering(const Graph& g, Vertex root) {
  const std::size_t n = g.num_vertices();
  if (root >= n) throw std::invalid_argument("BFS root out of range");
  std::vector<std::size_t> dist(n, Layering::kNoDepth);
  std::vector<Vertex> queue{root};
  dist[root] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbours(v)) {
      if (dist[w] == Layering::kNoDepth) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  if (queue.size() != n) {
    throw std::invalid_argument("bfs_layering needs a connected graph; layer each component");
  }
  std::vector<VertexSet> layers(dist[queue.back()] + 1);
  for (Vertex v = 0; v < n; ++v) layers[dist[v]].push_back(v);
  return Layering(std::move(layers));
}

std::optional<Edge> validate_layering(const Graph& g, const Layering& layering) {
  const std::size_t n = g.num_vertices();
  if (!layering.disjoint_ || layering.depth_.size() > n) {
    throw std::invalid_argument("layers are not a partition of the vertex set");
  }
  for (Vertex v = 0; v < n; ++v) {
    if (layering.depth(v) == Layering::kNoDepth) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " is in no layer");
    }
  }
  for (Edge e : g.edges()) {
    std::size_t a = layering.depth(e.u);
    std::size_t b = layering.depth(e.v);
    if ((a > b ? a - b : b - a) > 1) return e;
  }
  return std::nullopt;
}

std::vector<Shadow> shadows(const Graph& g, const Layering& layering) {
  const std::size_t n = g.num_vertices();
  std::vector<Shadow> out;
  std::vector<char> seen(n);
  std::vector<Vertex> stack;
  for (std::size_t i = 1; i < layering.size(); ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    // Scanning seeds in index order discovers components by minimum vertex.
    for (Vertex s = 0; s < n; ++s) {
      if (seen[s] || layering.depth(s) < i) continue;
      Shadow sh;
      sh.layer = i;
      seen[s] = 1;
      stack.assign(1, s);
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        sh.component.push_back(v);
        for (Vertex w : g.neighbours(v)) {
          std::size_t d = layering.depth(w);
          if (d >= i && !seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          } else if (d == i - 1) {
            sh.shadow.push_back(w);
          }
        }
      }
      std::sort(sh.component.begin(), sh.component.end());
      std::sort(sh.shadow.begin(), sh.shadow.end());
      sh.shadow.erase(std::unique(sh.shadow.begin(), sh.shadow.end()), sh.shadow.end());
      out.push_back(std::move(sh));
    }
  }
  return out;
}

std::optional<ShadowDefect> find_incomplete_shadow(const Graph& g, const Layering& layering) {
  for (Shadow& sh : shadows(g, layering)) {
    const auto& s = sh.shadow;
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t b = a + 1; b < s.size(); ++b) {
        if (!g.adjacent(s[a], s[b])) {
          Vertex u = s[a];
          Vertex v = s[b];
          return ShadowDefect{std::move(sh), u, v};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace nonrep
