#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nonrep/colouring.hpp"
#include "nonrep/graph.hpp"

namespace nonrep {

/// Outcome of a bounded search.
///
/// `counterexample` is empty iff `pass`. `cap` is the largest sequence length
/// (path order or walk length) examined; `complete` is true only when the cap
/// covers every possible length for this graph.
struct Verdict {
  bool pass = true;
  std::vector<Vertex> counterexample;
  std::size_t cap = 0;
  bool complete = false;
};

inline constexpr std::size_t kDefaultMaxOrder = 12;
inline constexpr std::size_t kDefaultMaxWalk = 10;

// Fails with a monochromatic edge (as a two-vertex sequence). Always complete.
Verdict is_proper(const Graph& g, const Colouring& c);

// Searches simple paths v_1..v_{2t} with 2t <= max_order whose colour sequence
// repeats after t. Complete iff max_order >= 2*floor(n/2).
//
// Both halves are grown in lockstep, (v_1, v_{t+1}), (v_2, v_{t+2}), ..., so
// a pair of partial halves whose colours already disagree is never extended.
// The reported path has the smallest t; among those it is the first in that
// lockstep order, with pairs compared lexicographically.
Verdict find_repetitive_path(const Graph& g, const Colouring& c,
                             std::size_t max_order = kDefaultMaxOrder);

// Searches lazy walks v_1..v_{2k} with 2k <= max_len that are repetitive and
// have v_i != v_{i+k} for every i, i.e. witnesses against strong
// nonrepetitiveness. Never complete on a graph with an edge.
Verdict find_bad_lazy_walk(const Graph& g, const Colouring& c,
                           std::size_t max_len = kDefaultMaxWalk);

// Searches repetitive lazy walks of length <= max_len that are not boring
// (some v_i != v_{i+k}).
Verdict find_nonboring_walk(const Graph& g, const Colouring& c, std::size_t max_len);

// Direct re-evaluation of the definitions on a single sequence.
bool is_lazy_walk(const Graph& g, std::span<const Vertex> walk);
bool is_repetitive(const Colouring& c, std::span<const Vertex> seq);
bool is_repetitive_path(const Graph& g, const Colouring& c, std::span<const Vertex> seq);
bool is_bad_lazy_walk(const Graph& g, const Colouring& c, std::span<const Vertex> walk);

inline constexpr std::size_t kExactPiMaxVertices = 10;
inline constexpr std::size_t kExactPiMaxColours = 6;

// Smallest p <= max_colours admitting a nonrepetitive p-colouring of g, or
// nullopt if there is none. Throws LimitError beyond 10 vertices or 6 colours.
std::optional<std::size_t> exact_pi(const Graph& g, std::size_t max_colours = kExactPiMaxColours);

}  // namespace nonrep
