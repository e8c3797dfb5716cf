#include "nonrep/tw_colouring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "nonrep/error.hpp"
#include "nonrep/words.hpp"

namespace nonrep {
namespace {

// Colours g with codes < 4^k given a decomposition of width <= k.
std::vector<Colour> colour_level(const Graph& g, const TreeDecomposition& td, std::size_t k) {
  const std::size_t n = g.num_vertices();
  std::vector<Colour> out(n, 0);
  if (g.num_edges() == 0 || k == 0) return out;

  const Graph chordal = chordal_completion(g, td);
  for (const VertexSet& comp : connected_components(chordal)) {
    if (comp.size() == 1) continue;
    const InducedSubgraph sub = induced_subgraph(chordal, comp);
    const Graph& c = sub.graph;
    const TreeDecomposition ctd = restrict_td(td, sub);
    const Layering layering = bfs_layering(c, 0);

    // H: the intra-layer edges, decomposed layer by layer.
    GraphBuilder hb(c.num_vertices());
    for (Edge e : c.edges()) {
      if (layering.depth(e.u) == layering.depth(e.v)) hb.add_edge(e.u, e.v);
    }
    std::vector<TreeDecomposition> pieces;
    pieces.reserve(layering.size());
    for (std::size_t i = 0; i < layering.size(); ++i) {
      TreeDecomposition piece = layer_td(c, ctd, layering, i);
      const VertexSet& layer = layering.layer(i);
      for (auto& bag : piece.bags) {
        for (Vertex& v : bag) v = layer[v];
        std::sort(bag.begin(), bag.end());
      }
      pieces.push_back(std::move(piece));
    }
    const Graph h = std::move(hb).build();
    const TreeDecomposition htd = chain_join(pieces);
#ifndef NDEBUG
    if (validate_td(h, htd)) throw std::logic_error("joined layer decompositions are invalid");
#endif
    const std::vector<Colour> inner = colour_level(h, htd, k - 1);
    const Colouring path = path_colouring_4(layering.size());
    for (Vertex v = 0; v < c.num_vertices(); ++v) {
      out[sub.host_of[v]] = inner[v] * 4 + path[layering.depth(v)];
    }
  }
  return out;
}

}  // namespace

Colouring strongly_nonrepetitive_colouring(const Graph& g, const TreeDecomposition& td) {
  if (auto bad = validate_td(g, td)) {
    throw std::invalid_argument("not a tree-decomposition of the graph: " + bad->message);
  }
  if (g.num_vertices() == 0) return Colouring{{}, 1};
  const std::size_t k = width(td);
  if (k > kMaxColouringWidth) {
    throw LimitError("decomposition width " + std::to_string(k) + " exceeds " +
                     std::to_string(kMaxColouringWidth));
  }
  return Colouring{colour_level(g, td, k), Colour{1} << (2 * k)};
}

TreeDecomposition layer_td(const Graph& chordal, const TreeDecomposition& td,
                           const Layering& layering, std::size_t i) {
  if (i >= layering.size()) throw std::invalid_argument("layer index out of range");
  if (i == 0) {
    if (layering.layer(0).size() != 1) throw std::invalid_argument("V_0 must be the BFS root");
    return TreeDecomposition{{VertexSet{0}}, {}};
  }
  if (width(td) < 1) throw std::invalid_argument("layer_td needs a decomposition of width >= 1");

  VertexSet prefix;
  for (std::size_t j = 0; j < i; ++j) {
    prefix.insert(prefix.end(), layering.layer(j).begin(), layering.layer(j).end());
  }
  std::sort(prefix.begin(), prefix.end());
  const Contraction minor = contract_set(chordal, prefix);
  const Vertex u = minor.image[prefix.front()];

  // Minor vertex -> position in V_i, kNoVertex for u and dropped layers.
  const VertexSet& layer = layering.layer(i);
  std::vector<Vertex> local(minor.graph.num_vertices(), kNoVertex);
  for (Vertex p = 0; p < layer.size(); ++p) local[minor.image[layer[p]]] = p;

  std::vector<std::size_t> node_id(td.num_nodes(), static_cast<std::size_t>(-1));
  TreeDecomposition out;
  for (std::size_t x = 0; x < td.num_nodes(); ++x) {
    bool has_u = false;
    VertexSet bag;
    for (Vertex v : td.bags[x]) {
      Vertex m = minor.image[v];
      if (m == u) {
        has_u = true;
      } else if (local[m] != kNoVertex) {
        bag.push_back(local[m]);
      }
    }
    if (!has_u) continue;
    std::sort(bag.begin(), bag.end());
    node_id[x] = out.bags.size();
    out.bags.push_back(std::move(bag));
  }
  for (auto [x, y] : td.tree_edges) {
    if (node_id[x] != static_cast<std::size_t>(-1) && node_id[y] != static_cast<std::size_t>(-1)) {
      out.tree_edges.emplace_back(node_id[x], node_id[y]);
    }
  }
#ifndef NDEBUG
  const InducedSubgraph sub = induced_subgraph(chordal, layer);
  if (auto bad = validate_td(sub.graph, out)) {
    throw std::logic_error("layer decomposition invalid: " + bad->message);
  }
#endif
  return out;
}

}  // namespace nonrep
