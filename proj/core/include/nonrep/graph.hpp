#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nonrep {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

// Sorted sequence of distinct vertex indices.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on the dense vertex set 0..n-1.
///
/// Immutable once built: adjacency lists are sorted, symmetric and free of
/// loops and parallel edges. Use GraphBuilder (lenient) or Graph::from_edges
/// (strict) to construct one.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  // Rejects loops, duplicate edges and out-of-range endpoints.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const noexcept { return adj_.size(); }
  std::size_t num_edges() const noexcept { return num_edges_; }

  std::span<const Vertex> neighbours(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;
  bool contains(Vertex v) const noexcept { return v < adj_.size(); }

  // Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  std::vector<std::vector<Vertex>> adj_;
  std::size_t num_edges_ = 0;
};

// Accumulates edges; duplicates are merged, loops rejected.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : adj_(n) {}

  void add_edge(Vertex u, Vertex v);
  void add_clique(std::span<const Vertex> vs);
  std::size_t num_vertices() const noexcept { return adj_.size(); }

  Graph build() &&;

 private:
  std::vector<std::vector<Vertex>> adj_;
};

enum class GraphFormat { kEdgeList, kGraph6 };

// Edge-list text: a header line "n <count>" followed by one "u v" pair per
// line (0-based). Blank lines and lines starting with '#' are ignored.
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::kEdgeList);
Graph parse_edge_list(std::string_view text);
Graph parse_graph6(std::string_view text);
std::string to_edge_list(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> host_of;   // local -> host
  std::vector<Vertex> local_of;  // host -> local, kNoVertex outside the set
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

bool is_clique(const Graph& g, std::span<const Vertex> s);

// Components sorted internally and ordered by their minimum vertex.
std::vector<VertexSet> connected_components(const Graph& g);

// True iff s is nonempty and g[s] is connected.
bool is_connected_subset(const Graph& g, std::span<const Vertex> s);

struct Contraction {
  Graph graph;
  std::vector<Vertex> image;  // host vertex -> vertex of the contracted graph
};

// Replaces the connected set s by one vertex. Vertex order is preserved with
// s collapsed onto the position of its minimum.
Contraction contract_set(const Graph& g, std::span<const Vertex> s);

// Throws std::invalid_argument unless s is sorted, distinct and in range.
void check_vertex_set(const Graph& g, std::span<const Vertex> s);

// Named small graphs used throughout tests, examples and the CLI.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);

}  // namespace nonrep
