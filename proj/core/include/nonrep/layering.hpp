#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nonrep/graph.hpp"

namespace nonrep {

/// Ordered sequence of vertex classes (V_0, V_1, ...).
///
/// The constructor only records the classes; whether they partition V(G) and
/// respect the edges of G is checked by validate_layering.
class Layering {
 public:
  Layering() = default;
  explicit Layering(std::vector<VertexSet> layers);

  const std::vector<VertexSet>& layers() const noexcept { return layers_; }
  const VertexSet& layer(std::size_t i) const { return layers_[i]; }
  std::size_t size() const noexcept { return layers_.size(); }

  // Depth of v; kNoDepth if v is in no layer.
  std::size_t depth(Vertex v) const {
    return v < depth_.size() ? depth_[v] : kNoDepth;
  }

  static constexpr std::size_t kNoDepth = static_cast<std::size_t>(-1);

  friend bool operator==(const Layering& a, const Layering& b) { return a.layers_ == b.layers_; }

 private:
  friend std::optional<Edge> validate_layering(const Graph&, const Layering&);
  std::vector<VertexSet> layers_;
  std::vector<std::size_t> depth_;
  bool disjoint_ = true;
};

// V_i = vertices at distance i from root. Throws std::invalid_argument if g
// is disconnected or root is out of range.
Layering bfs_layering(const Graph& g, Vertex root);

// Returns the first edge (in Graph::edges order) spanning two non-adjacent
// layers. Throws std::invalid_argument if the layers do not partition V(g).
std::optional<Edge> validate_layering(const Graph& g, const Layering& layering);

struct Shadow {
  std::size_t layer = 0;  // i: the component lives in V_i ∪ V_{i+1} ∪ ...
  VertexSet component;
  VertexSet shadow;       // neighbours of the component in V_{i-1}
};

// One entry per component of g[V_i ∪ V_{i+1} ∪ ...] for each i >= 1, ordered
// by i and then by the component's minimum vertex.
std::vector<Shadow> shadows(const Graph& g, const Layering& layering);

struct ShadowDefect {
  Shadow shadow;
  Vertex u;  // non-adjacent pair inside the shadow
  Vertex v;
};

std::optional<ShadowDefect> find_incomplete_shadow(const Graph& g, const Layering& layering);
inline bool is_shadow_complete(const Graph& g, const Layering& layering) {
  return !find_incomplete_shadow(g, layering).has_value();
}

}  // namespace nonrep
