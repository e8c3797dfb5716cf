#include "nonrep/planar_structure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "nonrep/error.hpp"
#include "nonrep/product.hpp"
#include "nonrep/tw_colouring.hpp"

namespace nonrep {
namespace {

using json = nlohmann::json;

std::size_t read_index(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + " must be an integer");
  if (j.is_number_unsigned()) return j.get<std::size_t>();
  auto value = j.get<std::int64_t>();
  if (value < 0) throw ParseError(where + " must be non-negative");
  return static_cast<std::size_t>(value);
}

const json& member(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + " is missing \"" + key + "\"");
  return *it;
}

// Components of the subgraph induced by the vertices with allowed[v] set,
// each sorted, ordered by minimum vertex.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& vertices,
                                         std::vector<char>& allowed) {
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s : vertices) {
    if (allowed[s] != 1) continue;
    VertexSet comp;
    allowed[s] = 2;
    stack.assign(1, s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbours(v)) {
        if (allowed[w] == 1) {
          allowed[w] = 2;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  for (Vertex v : vertices) {
    if (allowed[v] == 2) allowed[v] = 1;
  }
  return out;
}

}  // namespace

ProductStructure parse_product_structure(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("product structure must be a JSON object");
  ProductStructure s;
  s.ell = read_index(member(doc, "ell", "structure"), "\"ell\"");
  if (s.ell < 1) throw ParseError("\"ell\" must be at least 1");

  const json& h = member(doc, "H", "structure");
  if (!h.is_object()) throw ParseError("\"H\" must be an object");
  const std::size_t hn = read_index(member(h, "n", "\"H\""), "\"H\".\"n\"");
  const json& edges = member(h, "edges", "\"H\"");
  if (!edges.is_array()) throw ParseError("\"H\".\"edges\" must be an array");
  std::vector<Edge> hedges;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "H edge " + std::to_string(i);
    const json& e = edges[i];
    if (!e.is_array() || e.size() != 2) throw ParseError(where + " must be a pair");
    std::size_t u = read_index(e[0], where);
    std::size_t v = read_index(e[1], where);
    if (u >= hn || v >= hn) throw ParseError(where + " has an endpoint out of range");
    hedges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  try {
    s.h = Graph::from_edges(hn, hedges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("\"H\": ") + e.what());
  }

  const json& placement = member(doc, "placement", "structure");
  if (!placement.is_array()) throw ParseError("\"placement\" must be an array");
  for (std::size_t v = 0; v < placement.size(); ++v) {
    const std::string where = "placement of vertex " + std::to_string(v);
    const json& t = placement[v];
    if (!t.is_array() || t.size() != 3) throw ParseError(where + " must be a triple");
    Placement p{static_cast<Vertex>(0), read_index(t[1], where), read_index(t[2], where)};
    std::size_t hv = read_index(t[0], where);
    if (hv >= hn) throw ParseError(where + ": H vertex out of range");
    if (p.copy >= s.ell) throw ParseError(where + ": copy index must be below ell");
    p.h = static_cast<Vertex>(hv);
    s.placement.push_back(p);
  }
  return s;
}

std::string to_json(const ProductStructure& s) {
  json edges = json::array();
  for (Edge e : s.h.edges()) edges.push_back({e.u, e.v});
  json placement = json::array();
  for (const Placement& p : s.placement) placement.push_back({p.h, p.layer, p.copy});
  json doc;
  doc["ell"] = s.ell;
  doc["H"] = {{"n", s.h.num_vertices()}, {"edges", std::move(edges)}};
  doc["placement"] = std::move(placement);
  return doc.dump();
}

std::optional<StructureViolation> validate_product_structure(const Graph& g,
                                                             const ProductStructure& s) {
  using Kind = StructureViolation::Kind;
  const std::size_t n = g.num_vertices();
  if (s.placement.size() != n) {
    return StructureViolation{Kind::kSizeMismatch, kNoVertex, kNoVertex,
                              "placement has " + std::to_string(s.placement.size()) +
                                  " entries for " + std::to_string(n) + " vertices"};
  }
  for (Vertex v = 0; v < n; ++v) {
    const Placement& p = s.placement[v];
    if (p.h >= s.h.num_vertices() || p.copy >= s.ell) {
      return StructureViolation{Kind::kOutOfRange, v, kNoVertex,
                                "vertex " + std::to_string(v) + " is placed outside H x P x K_ell"};
    }
  }
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return s.placement[a] < s.placement[b]; });
  for (std::size_t i = 1; i < n; ++i) {
    if (s.placement[order[i - 1]] == s.placement[order[i]]) {
      Vertex a = std::min(order[i - 1], order[i]);
      Vertex b = std::max(order[i - 1], order[i]);
      return StructureViolation{Kind::kNotInjective, a, b,
                                "vertices " + std::to_string(a) + " and " + std::to_string(b) +
                                    " share a placement"};
    }
  }
  for (Edge e : g.edges()) {
    const Placement& a = s.placement[e.u];
    const Placement& b = s.placement[e.v];
    const bool h_ok = a.h == b.h || s.h.adjacent(a.h, b.h);
    const bool p_ok = (a.layer > b.layer ? a.layer - b.layer : b.layer - a.layer) <= 1;
    if (!h_ok || !p_ok) {
      return StructureViolation{Kind::kEdgeNotEmbedded, e.u, e.v,
                                "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                    (h_ok ? " spans non-adjacent layers"
                                          : " maps to non-adjacent vertices of H")};
    }
  }
  return std::nullopt;
}

void PlaneTriangulation::check(const Graph& g, const std::vector<Face>& faces) {
  const std::size_t n = g.num_vertices();
  if (n < 3) throw std::invalid_argument("a triangulation needs at least 3 vertices");
  for (const Face& f : faces) {
    if (f[0] >= f[1] || f[1] >= f[2] || f[2] >= n) {
      throw std::invalid_argument("face is not a sorted triple of distinct vertices");
    }
    if (!g.adjacent(f[0], f[1]) || !g.adjacent(f[1], f[2]) || !g.adjacent(f[0], f[2])) {
      throw std::invalid_argument("face boundary is not a triangle of the graph");
    }
  }
  if (n == 3) {
    if (g.num_edges() != 3 || faces.size() != 2) {
      throw std::invalid_argument("the 3-vertex triangulation is a triangle with two faces");
    }
    return;
  }
  if (g.num_edges() != 3 * n - 6) {
    throw std::invalid_argument("a triangulation on " + std::to_string(n) + " vertices has " +
                                std::to_string(3 * n - 6) + " edges, not " +
                                std::to_string(g.num_edges()));
  }
  if (faces.size() != 2 * n - 4) {
    throw std::invalid_argument("expected " + std::to_string(2 * n - 4) + " faces, found " +
                                std::to_string(faces.size()));
  }
  if (connected_components(g).size() != 1) throw std::invalid_argument("graph is disconnected");
  std::map<Edge, int> face_count;
  for (const Face& f : faces) {
    ++face_count[{f[0], f[1]}];
    ++face_count[{f[1], f[2]}];
    ++face_count[{f[0], f[2]}];
  }
  for (Edge e : g.edges()) {
    auto it = face_count.find(e);
    if (it == face_count.end() || it->second != 2) {
      throw std::invalid_argument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                  " is not on exactly two faces");
    }
  }
  // The faces around each vertex must close up into one cycle through all
  // of its neighbours.
  std::vector<std::vector<Edge>> link(n);
  for (const Face& f : faces) {
    link[f[0]].push_back({f[1], f[2]});
    link[f[1]].push_back({f[0], f[2]});
    link[f[2]].push_back({f[0], f[1]});
  }
  for (Vertex v = 0; v < n; ++v) {
    const auto nb = g.neighbours(v);
    if (link[v].size() != nb.size()) {
      throw std::invalid_argument("faces around vertex " + std::to_string(v) + " do not form a disc");
    }
    InducedSubgraph sub = induced_subgraph(g, std::vector<Vertex>(nb.begin(), nb.end()));
    GraphBuilder b(nb.size());
    for (Edge e : link[v]) b.add_edge(sub.local_of[e.u], sub.local_of[e.v]);
    Graph cycle = std::move(b).build();
    bool ok = cycle.num_edges() == nb.size() && connected_components(cycle).size() == 1;
    for (Vertex x = 0; ok && x < nb.size(); ++x) ok = cycle.degree(x) == 2;
    if (!ok) {
      throw std::invalid_argument("faces around vertex " + std::to_string(v) + " do not form a disc");
    }
  }
}

PlaneTriangulation PlaneTriangulation::from_graph(Graph g) {
  const std::size_t n = g.num_vertices();
  std::vector<Face> faces;
  if (n == 3) {
    faces = {Face{0, 1, 2}, Face{0, 1, 2}};
  } else if (n > 3) {
    std::vector<char> allowed(n, 1);
    VertexSet all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    for (Edge e : g.edges()) {
      for (Vertex w : g.neighbours(e.v)) {
        if (w <= e.v || !g.adjacent(e.u, w)) continue;
        allowed[e.u] = allowed[e.v] = allowed[w] = 0;
        const bool separating = components_within(g, all, allowed).size() != 1;
        allowed[e.u] = allowed[e.v] = allowed[w] = 1;
        if (!separating) faces.push_back({e.u, e.v, w});
      }
    }
  }
  check(g, faces);
  return PlaneTriangulation(std::move(g), std::move(faces));
}

PlaneTriangulation PlaneTriangulation::from_faces(std::size_t n, std::vector<Face> faces) {
  GraphBuilder b(n);
  for (Face& f : faces) {
    for (Vertex v : f) {
      if (v >= n) throw std::invalid_argument("face vertex out of range");
    }
    std::sort(f.begin(), f.end());
    b.add_edge(f[0], f[1]);
    b.add_edge(f[1], f[2]);
    b.add_edge(f[0], f[2]);
  }
  std::sort(faces.begin(), faces.end());
  Graph g = std::move(b).build();
  check(g, faces);
  return PlaneTriangulation(std::move(g), std::move(faces));
}

ProductStructure compute_product_structure(const PlaneTriangulation& t) {
  const Graph& g = t.graph();
  const std::size_t n = g.num_vertices();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  // BFS tree from vertex 0; parent = least neighbour one layer up.
  std::vector<std::size_t> depth(n, kNone);
  std::vector<Vertex> parent(n, kNoVertex);
  {
    std::vector<Vertex> queue{0};
    depth[0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      for (Vertex w : g.neighbours(v)) {
        if (depth[w] == kNone) {
          depth[w] = depth[v] + 1;
          queue.push_back(w);
        }
      }
    }
    for (Vertex v = 1; v < n; ++v) {
      for (Vertex w : g.neighbours(v)) {
        if (depth[w] + 1 == depth[v]) {
          parent[v] = w;
          break;
        }
      }
    }
  }

  const Face outer = *std::min_element(t.faces().begin(), t.faces().end());
  std::vector<std::size_t> part_of(n, kNone);
  std::vector<VertexSet> parts;
  TreeDecomposition td;
  for (Vertex v : outer) {
    part_of[v] = parts.size();
    parts.push_back({v});
  }
  td.bags.push_back({0, 1, 2});

  struct Job {
    VertexSet component;
    TreeNode parent;
  };
  std::vector<Job> jobs;
  std::vector<char> allowed(n, 0);
  VertexSet all(n);
  for (Vertex v = 0; v < n; ++v) {
    all[v] = v;
    allowed[v] = part_of[v] == kNone;
  }
  {
    auto comps = components_within(g, all, allowed);
    for (auto it = comps.rbegin(); it != comps.rend(); ++it) jobs.push_back({std::move(*it), 0});
  }
  std::fill(allowed.begin(), allowed.end(), 0);

  std::vector<char> in_c(n, 0);
  std::vector<std::size_t> colour(n, kNone);
  while (!jobs.empty()) {
    Job job = std::move(jobs.back());
    jobs.pop_back();
    const VertexSet& c = job.component;
    for (Vertex v : c) in_c[v] = 1;

    std::vector<std::size_t> s;
    for (Vertex v : c) {
      for (Vertex w : g.neighbours(v)) {
        if (!in_c[w]) s.push_back(part_of[w]);
      }
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.size() > 3 || std::find(s.begin(), s.end(), kNone) != s.end()) {
      throw std::logic_error("tripod partition: a region touches " + std::to_string(s.size()) +
                             " parts");
    }

    // Each vertex inherits the part where its tree path leaves the region.
    VertexSet by_depth = c;
    std::sort(by_depth.begin(), by_depth.end(),
              [&](Vertex a, Vertex b) { return depth[a] < depth[b]; });
    for (Vertex v : by_depth) {
      Vertex p = parent[v];
      colour[v] = in_c[p] ? colour[p] : part_of[p];
    }
    auto colour_of = [&](Vertex v) { return in_c[v] ? colour[v] : part_of[v]; };

    const Face* chosen = nullptr;
    const Face* fallback = nullptr;
    for (const Face& f : t.faces()) {
      if (!in_c[f[0]] && !in_c[f[1]] && !in_c[f[2]]) continue;
      if (!fallback) fallback = &f;
      bool covers = true;
      for (std::size_t part : s) {
        if (colour_of(f[0]) != part && colour_of(f[1]) != part && colour_of(f[2]) != part) {
          covers = false;
        }
      }
      if (covers) {
        chosen = &f;
        break;
      }
    }
    if (!chosen) {
      if (s.size() == 3) throw std::logic_error("tripod partition: no trichromatic face");
      chosen = fallback;
    }

    VertexSet y;
    for (Vertex v : *chosen) {
      for (Vertex x = v; in_c[x] == 1; x = parent[x]) {
        in_c[x] = 2;
        y.push_back(x);
      }
    }
    std::sort(y.begin(), y.end());
    const std::size_t id = parts.size();
    for (Vertex v : y) part_of[v] = id;
    parts.push_back(y);

    VertexSet bag(s.begin(), s.end());
    bag.push_back(static_cast<Vertex>(id));
    const TreeNode node = td.bags.size();
    td.bags.push_back(std::move(bag));
    td.tree_edges.emplace_back(job.parent, node);

    for (Vertex v : c) {
      allowed[v] = part_of[v] == kNone;
      in_c[v] = 0;
    }
    auto comps = components_within(g, c, allowed);
    for (Vertex v : c) allowed[v] = 0;
    for (auto it = comps.rbegin(); it != comps.rend(); ++it) {
      jobs.push_back({std::move(*it), node});
    }
  }

  ProductStructure out;
  out.ell = 3;
  GraphBuilder hb(parts.size());
  for (Edge e : g.edges()) {
    if (part_of[e.u] != part_of[e.v]) {
      hb.add_edge(static_cast<Vertex>(part_of[e.u]), static_cast<Vertex>(part_of[e.v]));
    }
  }
  out.h = std::move(hb).build();
  out.placement.resize(n);
  for (std::size_t id = 0; id < parts.size(); ++id) {
    VertexSet part = parts[id];
    std::stable_sort(part.begin(), part.end(),
                     [&](Vertex a, Vertex b) { return depth[a] < depth[b]; });
    std::size_t copy = 0;
    for (std::size_t i = 0; i < part.size(); ++i) {
      copy = (i > 0 && depth[part[i]] == depth[part[i - 1]]) ? copy + 1 : 0;
      if (copy >= 3) throw std::logic_error("tripod meets a layer in more than three vertices");
      out.placement[part[i]] = Placement{static_cast<Vertex>(id), depth[part[i]], copy};
    }
  }
  if (auto bad = validate_td(out.h, td)) {
    throw std::logic_error("tripod decomposition of H is invalid: " + bad->message);
  }
  if (width(td) > 3) throw std::logic_error("tripod decomposition of H is wider than 3");
  if (auto bad = validate_product_structure(g, out)) {
    throw std::logic_error("computed product structure is invalid: " + bad->message);
  }
  out.h_decomposition = std::move(td);
  return out;
}

PipelineResult colour_genus(const Graph& g, const ProductStructure& s,
                            const TreeDecomposition* h_td) {
  if (auto bad = validate_product_structure(g, s)) {
    throw std::invalid_argument("invalid product structure: " + bad->message);
  }
  PipelineResult result;
  result.bound = Colour{64} * 4 * s.ell;
  if (g.num_vertices() == 0) {
    result.colouring = Colouring{{}, 1};
    result.certified = true;
    return result;
  }
  TreeDecomposition fallback;
  if (!h_td) {
    if (s.h_decomposition) {
      h_td = &*s.h_decomposition;
    } else {
      fallback = heuristic_td(s.h);
      h_td = &fallback;
    }
  }
  if (auto bad = validate_td(s.h, *h_td)) {
    throw std::invalid_argument("decomposition of H is invalid: " + bad->message);
  }
  result.h_width = width(*h_td);
  result.certified = result.h_width <= 3;

  std::size_t layers = 0;
  for (const Placement& p : s.placement) layers = std::max(layers, p.layer + 1);
  result.layers = layers;
  const std::size_t hn = s.h.num_vertices();
  if (layers > kDefaultProductLimit / hn || hn * layers > kDefaultProductLimit / s.ell) {
    throw LimitError("H x P x K_ell exceeds " + std::to_string(kDefaultProductLimit) +
                     " vertices");
  }
  const Colouring phi_h = strongly_nonrepetitive_colouring(s.h, *h_td);
  const Colouring phi_hp = compose_path_factor(phi_h, layers, ProductIndex{hn, layers});
  const ProductIndex hp_k{hn * layers, s.ell};
  const Colouring phi = compose_clique_factor(phi_hp, s.ell, hp_k);

  result.colouring.palette = phi.palette;
  result.colouring.colours.resize(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const Placement& p = s.placement[v];
    result.colouring.colours[v] =
        phi[hp_k.index(static_cast<Vertex>(p.h * layers + p.layer), static_cast<Vertex>(p.copy))];
  }
  return result;
}

PipelineResult colour_planar(const Graph& g, const ProductStructure& s,
                             const TreeDecomposition* h_td) {
  if (s.ell != 3) throw std::invalid_argument("the planar pipeline needs ell = 3");
  return colour_genus(g, s, h_td);
}

}  // namespace nonrep
