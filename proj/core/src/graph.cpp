#include "nonrep/graph.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "nonrep/error.hpp"

namespace nonrep {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::set<Edge> seen;
  GraphBuilder b(n);
  for (Edge e : edges) {
    if (e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    Edge key{std::min(e.u, e.v), std::max(e.u, e.v)};
    if (!seen.insert(key).second) {
      throw std::invalid_argument("duplicate edge " + std::to_string(key.u) + " " +
                                  std::to_string(key.v));
    }
    b.add_edge(e.u, e.v);
  }
  return std::move(b).build();
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u >= adj_.size() || v >= adj_.size()) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  adj_[u].push_back(v);
  adj_[v].push_back(u);
}

void GraphBuilder::add_clique(std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) add_edge(vs[i], vs[j]);
  }
}

Graph GraphBuilder::build() && {
  Graph g;
  std::size_t degree_sum = 0;
  for (auto& a : adj_) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    degree_sum += a.size();
  }
  g.adj_ = std::move(adj_);
  g.num_edges_ = degree_sum / 2;
  return g;
}

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

std::size_t parse_index(std::string_view tok, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0].front() == '#') continue;
    if (!n) {
      if (toks.size() != 2 || toks[0] != "n") {
        throw ParseError(lineno, "expected header 'n <count>'");
      }
      n = parse_index(toks[1], lineno);
      continue;
    }
    if (toks.size() != 2) throw ParseError(lineno, "expected 'u v'");
    std::size_t u = parse_index(toks[0], lineno);
    std::size_t v = parse_index(toks[1], lineno);
    if (u >= *n || v >= *n) throw ParseError(lineno, "vertex index out of range");
    if (u == v) throw ParseError(lineno, "loop at vertex " + std::to_string(u));
    Edge key{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    if (!seen.insert(key).second) throw ParseError(lineno, "duplicate edge");
    edges.push_back(key);
  }
  if (!n) throw ParseError("missing header 'n <count>'");
  return Graph::from_edges(*n, edges);
}

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
    text.remove_suffix(1);
  }
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126) throw ParseError("graph6 byte out of range");
  }
  std::size_t pos = 0;
  std::size_t n = 0;
  auto byte = [&](std::size_t i) { return static_cast<std::size_t>(text[i] - 63); };
  if (text[0] != 126) {
    n = byte(0);
    pos = 1;
  } else if (text.size() >= 4 && text[1] != 126) {
    n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  } else if (text.size() >= 8) {
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | byte(i);
    pos = 8;
  } else {
    throw ParseError("truncated graph6 size field");
  }
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (text.size() - pos != need) {
    throw ParseError("graph6 payload has " + std::to_string(text.size() - pos) +
                     " bytes, expected " + std::to_string(need));
  }
  GraphBuilder b(n);
  std::size_t k = 0;
  // Upper triangle in column order: (0,1),(0,2),(1,2),(0,3),...
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      std::size_t chunk = byte(pos + k / 6);
      if (chunk & (std::size_t{1} << (5 - k % 6))) {
        b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return std::move(b).build();
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::kGraph6 ? parse_graph6(text) : parse_edge_list(text);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.num_vertices() << '\n';
  for (Edge e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

void check_vertex_set(const Graph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= g.num_vertices()) {
      throw std::invalid_argument("vertex " + std::to_string(s[i]) + " out of range");
    }
    if (i > 0 && s[i - 1] >= s[i]) {
      throw std::invalid_argument("vertex set must be sorted and distinct");
    }
  }
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  check_vertex_set(g, s);
  InducedSubgraph out;
  out.host_of.assign(s.begin(), s.end());
  out.local_of.assign(g.num_vertices(), kNoVertex);
  for (Vertex i = 0; i < s.size(); ++i) out.local_of[s[i]] = i;
  GraphBuilder b(s.size());
  for (Vertex i = 0; i < s.size(); ++i) {
    for (Vertex w : g.neighbours(s[i])) {
      Vertex j = out.local_of[w];
      if (j != kNoVertex && i < j) b.add_edge(i, j);
    }
  }
  out.graph = std::move(b).build();
  return out;
}

bool is_clique(const Graph& g, std::span<const Vertex> s) {
  for (Vertex v : s) {
    if (v >= g.num_vertices()) throw std::invalid_argument("vertex out of range");
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] != s[j] && !g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbours(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected_subset(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) return false;
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : s) in[v] = 1;
  std::vector<Vertex> stack{s[0]};
  in[s[0]] = 2;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbours(v)) {
      if (in[w] == 1) {
        in[w] = 2;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == s.size();
}

Contraction contract_set(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) throw std::invalid_argument("cannot contract an empty set");
  check_vertex_set(g, s);
  if (!is_connected_subset(g, s)) {
    throw std::invalid_argument("contracted set does not induce a connected subgraph");
  }
  const std::size_t n = g.num_vertices();
  std::vector<char> in(n, 0);
  for (Vertex v : s) in[v] = 1;
  Contraction out;
  out.image.assign(n, kNoVertex);
  Vertex next = 0;
  Vertex merged = kNoVertex;
  for (Vertex v = 0; v < n; ++v) {
    if (in[v]) {
      if (merged == kNoVertex) merged = next++;
      out.image[v] = merged;
    } else {
      out.image[v] = next++;
    }
  }
  GraphBuilder b(next);
  for (Edge e : g.edges()) {
    Vertex a = out.image[e.u];
    Vertex c = out.image[e.v];
    if (a != c) b.add_edge(a, c);
  }
  out.graph = std::move(b).build();
  return out;
}

Graph path_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i) b.add_edge(i, static_cast<Vertex>((i + 1) % n));
  return std::move(b).build();
}

Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) b.add_edge(i, j);
  }
  return std::move(b).build();
}

}  // namespace nonrep
