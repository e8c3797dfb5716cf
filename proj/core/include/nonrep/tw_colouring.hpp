#pragma once

#include <cstddef>

#include "nonrep/colouring.hpp"
#include "nonrep/graph.hpp"
#include "nonrep/layering.hpp"
#include "nonrep/tree_decomposition.hpp"

namespace nonrep {

// Widths above this would overflow the 64-bit code space 4^k.
inline constexpr std::size_t kMaxColouringWidth = 31;

/// Strongly nonrepetitive colouring of g from a width-k decomposition, with
/// palette 4^k.
///
/// One recursion level BFS-layers each component of the chordal completion
/// (root: least vertex), colours the layer indices with path_colouring_4 and
/// recurses on the intra-layer edges with a width-(k-1) decomposition. The
/// code of a vertex is 4 * (code one level down) + (its layer colour), so the
/// base-4 digits of a colour list the levels from the outermost upwards:
/// digit 0 is the first level's layer colour.
///
/// Throws std::invalid_argument if td is not a decomposition of g and
/// LimitError if its width exceeds kMaxColouringWidth.
Colouring strongly_nonrepetitive_colouring(const Graph& g, const TreeDecomposition& td);

// Decomposition of chordal[V_i] of width <= width(td) - 1, bags indexed by
// position in the sorted layer V_i.
//
// V_0 u ... u V_{i-1} is contracted to one vertex u, deeper layers are
// dropped, and the bags are mapped through the contraction. The nodes whose
// bags contain u form a subtree; every vertex of V_i is adjacent to u, so by
// the Helly property that subtree covers all of chordal[V_i]. Deleting u
// leaves the result.
//
// `chordal` must be connected and `layering` a BFS layering of it; td must be
// a decomposition of it.
TreeDecomposition layer_td(const Graph& chordal, const TreeDecomposition& td,
                           const Layering& layering, std::size_t i);

}  // namespace nonrep
