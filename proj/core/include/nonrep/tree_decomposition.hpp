#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nonrep/graph.hpp"

namespace nonrep {

using TreeNode = std::size_t;

/// Bags indexed by the nodes 0..k-1 of a tree given by its edge list.
///
/// Empty bags are allowed (restrict_td produces them); width() needs at
/// least one nonempty bag.
struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<TreeNode, TreeNode>> tree_edges;

  std::size_t num_nodes() const noexcept { return bags.size(); }

  friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

// PACE 2017 .td: "s td <bags> <max bag size> <n>", then "b <id> <v...>"
// lines and "<x> <y>" tree edges, all 1-based; "c" lines are comments.
// `num_host_vertices`, if given, receives the declared n.
TreeDecomposition parse_td(std::string_view text, std::size_t* num_host_vertices = nullptr);
std::string to_pace(const TreeDecomposition& td, std::size_t num_host_vertices);

// Throws std::invalid_argument unless the edge list forms a tree on
// num_nodes() nodes.
void check_tree_shape(const TreeDecomposition& td);

struct TdViolation {
  enum class Kind {
    kNotATree,
    kBagOutOfRange,
    kVertexUncovered,
    kEdgeUncovered,
    kSubtreeDisconnected,
  };
  Kind kind;
  Vertex u = kNoVertex;  // witness vertex (or first endpoint)
  Vertex v = kNoVertex;  // second endpoint for kEdgeUncovered
  std::string message;
};

std::optional<TdViolation> validate_td(const Graph& g, const TreeDecomposition& td);

// max |B_x| - 1. Throws std::invalid_argument when every bag is empty.
std::size_t width(const TreeDecomposition& td);

struct RichnessViolation {
  std::pair<TreeNode, TreeNode> tree_edge;
  VertexSet intersection;
  bool too_large;  // otherwise: not a clique
};

// Every adjacent-bag intersection must be a clique on at most r vertices.
std::optional<RichnessViolation> check_r_rich(const Graph& g, const TreeDecomposition& td,
                                              std::size_t r);

// Supergraph of g in which every bag is a clique.
Graph chordal_completion(const Graph& g, const TreeDecomposition& td);

// Maximum cardinality search + perfect elimination ordering check.
bool is_chordal(const Graph& g);

// Decomposition induced by an elimination ordering (one node per vertex).
// Components are chained so the result is always a tree.
TreeDecomposition td_from_elimination_order(const Graph& g, std::span<const Vertex> order);

// Greedy min-fill elimination (ties: min degree, then min index).
std::vector<Vertex> min_fill_order(const Graph& g);
TreeDecomposition heuristic_td(const Graph& g);

inline constexpr std::size_t kDefaultTreewidthBudget = 30;
inline constexpr std::size_t kMaxTreewidthBudget = 64;

// Exact treewidth by search over elimination orderings; throws LimitError
// when g has more than `budget` vertices (budget itself is at most 64).
std::size_t exact_treewidth(const Graph& g, std::size_t budget = kDefaultTreewidthBudget);

// Bags intersected with the induced vertex set and renumbered to its local
// indices. Nodes whose bags become empty are kept.
TreeDecomposition restrict_td(const TreeDecomposition& td, const InducedSubgraph& sub);

// Joins decompositions of disjoint graphs into one tree by chaining node 0 of
// each piece to node 0 of the next. Bags are copied verbatim.
TreeDecomposition chain_join(std::span<const TreeDecomposition> parts);

}  // namespace nonrep
