#include "nonrep/tree_decomposition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "nonrep/error.hpp"

namespace nonrep {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t to_index(std::string_view tok, std::size_t line_no) {
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || end != tok.data() + tok.size()) {
    throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return value;
}

// Union-find over tree nodes; returns false on the first cycle.
class Dsu {
 public:
  explicit Dsu(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::optional<std::string> tree_shape_error(const TreeDecomposition& td) {
  const std::size_t k = td.num_nodes();
  if (k == 0) return td.tree_edges.empty() ? std::nullopt
                                          : std::optional<std::string>("edges without nodes");
  if (td.tree_edges.size() != k - 1) {
    return std::to_string(td.tree_edges.size()) + " tree edges for " + std::to_string(k) +
           " nodes";
  }
  Dsu dsu(k);
  for (auto [x, y] : td.tree_edges) {
    if (x >= k || y >= k) return "tree edge endpoint out of range";
    if (!dsu.unite(x, y)) {
      return "tree edges contain a cycle through nodes " + std::to_string(x) + " and " +
             std::to_string(y);
    }
  }
  return std::nullopt;
}

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Dense elimination graph: adjacency matrix plus neighbour lists of the
// vertices not yet eliminated.
class EliminationGraph {
 public:
  explicit EliminationGraph(const Graph& g)
      : n_(g.num_vertices()), adj_(n_ * n_, 0), eliminated_(n_, 0), nbrs_(n_) {
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex w : g.neighbours(v)) {
        adj_[v * n_ + w] = 1;
        nbrs_[v].push_back(w);
      }
    }
  }

  bool eliminated(Vertex v) const { return eliminated_[v] != 0; }
  const std::vector<Vertex>& neighbours(Vertex v) const { return nbrs_[v]; }

  std::size_t fill_in(Vertex v) const {
    const auto& nb = nbrs_[v];
    std::size_t missing = 0;
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        if (!adj_[nb[a] * n_ + nb[b]]) ++missing;
      }
    }
    return missing;
  }

  // Turns N(v) into a clique and removes v; returns N(v) sorted.
  VertexSet eliminate(Vertex v) {
    VertexSet nb = nbrs_[v];
    std::sort(nb.begin(), nb.end());
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        Vertex x = nb[a];
        Vertex y = nb[b];
        if (!adj_[x * n_ + y]) {
          adj_[x * n_ + y] = adj_[y * n_ + x] = 1;
          nbrs_[x].push_back(y);
          nbrs_[y].push_back(x);
        }
      }
    }
    for (Vertex w : nb) {
      auto& l = nbrs_[w];
      l.erase(std::find(l.begin(), l.end(), v));
      adj_[w * n_ + v] = adj_[v * n_ + w] = 0;
    }
    nbrs_[v].clear();
    eliminated_[v] = 1;
    return nb;
  }

 private:
  std::size_t n_;
  std::vector<char> adj_;
  std::vector<char> eliminated_;
  std::vector<std::vector<Vertex>> nbrs_;
};

}  // namespace

TreeDecomposition parse_td(std::string_view text, std::size_t* num_host_vertices) {
  TreeDecomposition td;
  bool have_header = false;
  std::size_t declared_max = 0;
  std::size_t n = 0;
  std::vector<char> bag_seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "s") {
      if (have_header) throw ParseError(line_no, "second 's td' header");
      if (tok.size() != 5 || tok[1] != "td") {
        throw ParseError(line_no, "header must be 's td <bags> <max bag size> <vertices>'");
      }
      std::size_t bags = to_index(tok[2], line_no);
      declared_max = to_index(tok[3], line_no);
      n = to_index(tok[4], line_no);
      td.bags.assign(bags, {});
      bag_seen.assign(bags, 0);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "content before the 's td' header");
    if (tok[0] == "b") {
      if (tok.size() < 2) throw ParseError(line_no, "bag line without an id");
      std::size_t id = to_index(tok[1], line_no);
      if (id == 0 || id > td.bags.size()) {
        throw ParseError(line_no, "bag id " + std::to_string(id) + " out of range");
      }
      if (bag_seen[id - 1]) throw ParseError(line_no, "duplicate bag id " + std::to_string(id));
      bag_seen[id - 1] = 1;
      VertexSet bag;
      for (std::size_t i = 2; i < tok.size(); ++i) {
        std::size_t v = to_index(tok[i], line_no);
        if (v == 0 || v > n) {
          throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range");
        }
        bag.push_back(static_cast<Vertex>(v - 1));
      }
      std::sort(bag.begin(), bag.end());
      if (std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
        throw ParseError(line_no, "vertex repeated within a bag");
      }
      td.bags[id - 1] = std::move(bag);
      continue;
    }
    if (tok.size() != 2) throw ParseError(line_no, "expected a tree edge '<x> <y>'");
    std::size_t x = to_index(tok[0], line_no);
    std::size_t y = to_index(tok[1], line_no);
    if (x == 0 || y == 0 || x > td.bags.size() || y > td.bags.size()) {
      throw ParseError(line_no, "tree edge endpoint out of range");
    }
    td.tree_edges.emplace_back(x - 1, y - 1);
  }
  if (!have_header) throw ParseError("missing 's td' header");
  for (std::size_t i = 0; i < bag_seen.size(); ++i) {
    if (!bag_seen[i]) throw ParseError("bag " + std::to_string(i + 1) + " declared but missing");
  }
  std::size_t actual_max = 0;
  for (const auto& b : td.bags) actual_max = std::max(actual_max, b.size());
  if (actual_max != declared_max) {
    throw ParseError("header declares max bag size " + std::to_string(declared_max) +
                     " but the largest bag has " + std::to_string(actual_max));
  }
  if (auto err = tree_shape_error(td)) throw ParseError(*err);
  if (num_host_vertices) *num_host_vertices = n;
  return td;
}

std::string to_pace(const TreeDecomposition& td, std::size_t num_host_vertices) {
  std::size_t max_bag = 0;
  for (const auto& b : td.bags) max_bag = std::max(max_bag, b.size());
  std::ostringstream out;
  out << "s td " << td.num_nodes() << ' ' << max_bag << ' ' << num_host_vertices << '\n';
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << i + 1;
    for (Vertex v : td.bags[i]) out << ' ' << v + 1;
    out << '\n';
  }
  for (auto [x, y] : td.tree_edges) out << x + 1 << ' ' << y + 1 << '\n';
  return out.str();
}

void check_tree_shape(const TreeDecomposition& td) {
  if (auto err = tree_shape_error(td)) throw std::invalid_argument(*err);
}

std::optional<TdViolation> validate_td(const Graph& g, const TreeDecomposition& td) {
  using Kind = TdViolation::Kind;
  const std::size_t n = g.num_vertices();
  for (std::size_t x = 0; x < td.num_nodes(); ++x) {
    const auto& bag = td.bags[x];
    for (std::size_t i = 0; i < bag.size(); ++i) {
      if (bag[i] >= n || (i > 0 && bag[i] <= bag[i - 1])) {
        return TdViolation{Kind::kBagOutOfRange, bag[i], kNoVertex,
                           "bag " + std::to_string(x) + " is not a sorted set of host vertices"};
      }
    }
  }
  if (auto err = tree_shape_error(td)) return TdViolation{Kind::kNotATree, kNoVertex, kNoVertex, *err};

  std::vector<std::vector<TreeNode>> nodes_of(n);
  for (std::size_t x = 0; x < td.num_nodes(); ++x) {
    for (Vertex v : td.bags[x]) nodes_of[v].push_back(x);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (nodes_of[v].empty()) {
      return TdViolation{Kind::kVertexUncovered, v, kNoVertex,
                         "vertex " + std::to_string(v) + " is in no bag"};
    }
  }
  for (Edge e : g.edges()) {
    const auto& a = nodes_of[e.u];
    const auto& b = nodes_of[e.v];
    std::vector<TreeNode> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (common.empty()) {
      return TdViolation{Kind::kEdgeUncovered, e.u, e.v,
                         "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                             " is in no bag"};
    }
  }
  // Nodes containing v span a forest; it is a subtree iff it has one edge
  // fewer than nodes.
  std::vector<std::size_t> inner_edges(n, 0);
  for (auto [x, y] : td.tree_edges) {
    for (Vertex v : intersect(td.bags[x], td.bags[y])) ++inner_edges[v];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (inner_edges[v] + 1 != nodes_of[v].size()) {
      return TdViolation{Kind::kSubtreeDisconnected, v, kNoVertex,
                         "bags containing vertex " + std::to_string(v) +
                             " do not form a subtree"};
    }
  }
  return std::nullopt;
}

std::size_t width(const TreeDecomposition& td) {
  std::size_t max_bag = 0;
  for (const auto& b : td.bags) max_bag = std::max(max_bag, b.size());
  if (max_bag == 0) throw std::invalid_argument("width of a decomposition with no nonempty bag");
  return max_bag - 1;
}

std::optional<RichnessViolation> check_r_rich(const Graph& g, const TreeDecomposition& td,
                                              std::size_t r) {
  for (auto edge : td.tree_edges) {
    VertexSet common = intersect(td.bags[edge.first], td.bags[edge.second]);
    if (common.size() > r) return RichnessViolation{edge, std::move(common), true};
    if (!is_clique(g, common)) return RichnessViolation{edge, std::move(common), false};
  }
  return std::nullopt;
}

Graph chordal_completion(const Graph& g, const TreeDecomposition& td) {
  GraphBuilder b(g.num_vertices());
  for (Edge e : g.edges()) b.add_edge(e.u, e.v);
  for (const auto& bag : td.bags) b.add_clique(bag);
  return std::move(b).build();
}

bool is_chordal(const Graph& g) {
  const std::size_t n = g.num_vertices();
  // Maximum cardinality search visits the vertices in reverse of a perfect
  // elimination ordering whenever one exists.
  std::vector<std::size_t> weight(n, 0);
  std::vector<char> visited(n, 0);
  std::vector<std::size_t> position(n);
  std::vector<Vertex> visit;
  visit.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = kNoVertex;
    for (Vertex v = 0; v < n; ++v) {
      if (!visited[v] && (best == kNoVertex || weight[v] > weight[best])) best = v;
    }
    visited[best] = 1;
    position[best] = step;
    visit.push_back(best);
    for (Vertex w : g.neighbours(best)) {
      if (!visited[w]) ++weight[w];
    }
  }
  // Elimination order = reverse visit order. For each v, its neighbours
  // visited earlier (eliminated later) minus the latest-visited one must be
  // adjacent to that one.
  for (Vertex v : visit) {
    Vertex parent = kNoVertex;
    for (Vertex w : g.neighbours(v)) {
      if (position[w] < position[v] && (parent == kNoVertex || position[w] > position[parent])) {
        parent = w;
      }
    }
    if (parent == kNoVertex) continue;
    for (Vertex w : g.neighbours(v)) {
      if (w != parent && position[w] < position[v] && !g.adjacent(w, parent)) return false;
    }
  }
  return true;
}

TreeDecomposition td_from_elimination_order(const Graph& g, std::span<const Vertex> order) {
  const std::size_t n = g.num_vertices();
  if (order.size() != n) throw std::invalid_argument("elimination order must list every vertex");
  std::vector<std::size_t> rank(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || rank[order[i]] != n) {
      throw std::invalid_argument("elimination order is not a permutation");
    }
    rank[order[i]] = i;
  }
  EliminationGraph eg(g);
  TreeDecomposition td;
  td.bags.resize(n);
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v = order[i];
    VertexSet later = eg.eliminate(v);
    VertexSet bag = later;
    bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
    td.bags[i] = std::move(bag);
    if (later.empty()) {
      roots.push_back(i);
      continue;
    }
    std::size_t parent = n;
    for (Vertex w : later) parent = std::min(parent, rank[w]);
    td.tree_edges.emplace_back(i, parent);
  }
  for (std::size_t i = 1; i < roots.size(); ++i) td.tree_edges.emplace_back(roots[i - 1], roots[i]);
  return td;
}

std::vector<Vertex> min_fill_order(const Graph& g) {
  const std::size_t n = g.num_vertices();
  EliminationGraph eg(g);
  std::vector<Vertex> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = kNoVertex;
    std::size_t best_fill = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (eg.eliminated(v)) continue;
      std::size_t fill = eg.fill_in(v);
      if (best == kNoVertex || fill < best_fill ||
          (fill == best_fill && eg.neighbours(v).size() < eg.neighbours(best).size())) {
        best = v;
        best_fill = fill;
      }
    }
    eg.eliminate(best);
    order.push_back(best);
  }
  return order;
}

TreeDecomposition heuristic_td(const Graph& g) {
  auto order = min_fill_order(g);
  return td_from_elimination_order(g, order);
}

TreeDecomposition restrict_td(const TreeDecomposition& td, const InducedSubgraph& sub) {
  TreeDecomposition out;
  out.tree_edges = td.tree_edges;
  out.bags.reserve(td.bags.size());
  for (const auto& bag : td.bags) {
    VertexSet local;
    for (Vertex v : bag) {
      if (v < sub.local_of.size() && sub.local_of[v] != kNoVertex) local.push_back(sub.local_of[v]);
    }
    std::sort(local.begin(), local.end());
    out.bags.push_back(std::move(local));
  }
  return out;
}

TreeDecomposition chain_join(std::span<const TreeDecomposition> parts) {
  TreeDecomposition out;
  std::optional<TreeNode> previous_root;
  for (const auto& part : parts) {
    if (part.num_nodes() == 0) continue;
    const TreeNode offset = out.num_nodes();
    for (const auto& bag : part.bags) out.bags.push_back(bag);
    for (auto [x, y] : part.tree_edges) out.tree_edges.emplace_back(x + offset, y + offset);
    if (previous_root) out.tree_edges.emplace_back(*previous_root, offset);
    previous_root = offset;
  }
  return out;
}

}  // namespace nonrep
