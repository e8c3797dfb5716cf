#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nonrep/colouring.hpp"
#include "nonrep/graph.hpp"
#include "nonrep/tree_decomposition.hpp"

namespace nonrep {

// Position of a vertex of G in H ⊠ P ⊠ K_ell.
struct Placement {
  Vertex h = 0;
  std::size_t layer = 0;
  std::size_t copy = 0;
  friend bool operator==(const Placement&, const Placement&) = default;
  friend auto operator<=>(const Placement&, const Placement&) = default;
};

struct ProductStructure {
  Graph h;
  std::size_t ell = 1;
  std::vector<Placement> placement;
  // Decomposition of h known to the producer, if any. Not serialized.
  std::optional<TreeDecomposition> h_decomposition;
};

// {"ell": int, "H": {"n": int, "edges": [[u, v], ...]}, "placement": [[h, p, q], ...]}
// Throws ParseError on schema violations, negative numbers, h >= n or q >= ell.
ProductStructure parse_product_structure(std::string_view json_text);
std::string to_json(const ProductStructure& s);

struct StructureViolation {
  enum class Kind { kSizeMismatch, kOutOfRange, kNotInjective, kEdgeNotEmbedded };
  Kind kind;
  Vertex u = kNoVertex;
  Vertex v = kNoVertex;
  std::string message;
};

// Checks that the placement is an injective homomorphism-like embedding of g
// into H ⊠ P ⊠ K_ell (g is a subgraph of the product under it).
std::optional<StructureViolation> validate_product_structure(const Graph& g,
                                                             const ProductStructure& s);

using Face = std::array<Vertex, 3>;

/// Triangulation of the sphere, given by its graph and its triangular faces
/// (each sorted). For n >= 4 the faces are exactly the non-separating
/// triangles, so the graph alone determines them.
class PlaneTriangulation {
 public:
  // Throws std::invalid_argument unless g is a triangulation (n >= 3).
  static PlaneTriangulation from_graph(Graph g);
  static PlaneTriangulation from_faces(std::size_t n, std::vector<Face> faces);

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<Face>& faces() const noexcept { return faces_; }

 private:
  PlaneTriangulation(Graph g, std::vector<Face> faces)
      : graph_(std::move(g)), faces_(std::move(faces)) {}
  static void check(const Graph& g, const std::vector<Face>& faces);

  Graph graph_;
  std::vector<Face> faces_;
};

// Partition into tripods (at most three vertical paths of a BFS tree each)
// whose quotient H has treewidth <= 3, with ell = 3. The decomposition of H
// built alongside is stored in h_decomposition. The result is validated
// before it is returned; std::logic_error signals an internal failure.
ProductStructure compute_product_structure(const PlaneTriangulation& t);

struct PipelineResult {
  Colouring colouring;
  std::size_t h_width = 0;
  std::size_t layers = 0;
  Colour bound = 0;    // 4^3 * 4 * ell
  bool certified = false;  // decomposition of H has width <= 3
};

// H coloured by strongly_nonrepetitive_colouring, then the path factor (x4),
// then the clique factor (x ell), pulled back along the placement. Uses
// h_td, else s.h_decomposition, else heuristic_td(H). Throws
// std::invalid_argument if the structure is invalid for g.
PipelineResult colour_genus(const Graph& g, const ProductStructure& s,
                            const TreeDecomposition* h_td = nullptr);

// As colour_genus, additionally requiring ell == 3.
PipelineResult colour_planar(const Graph& g, const ProductStructure& s,
                             const TreeDecomposition* h_td = nullptr);

}  // namespace nonrep
