#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "nonrep/graph.hpp"
#include "nonrep/planar_structure.hpp"
#include "nonrep/tree_decomposition.hpp"

namespace nonrep {

// Generators for tests, benchmarks and `nonrep generate`. All randomness
// comes from the caller's engine, so a seed reproduces the instance.
using Rng = std::mt19937_64;

struct DecomposedGraph {
  Graph graph;
  TreeDecomposition td;
};

// k-tree on n vertices (K_n when n <= k + 1) with its width-k decomposition.
DecomposedGraph random_k_tree(std::size_t n, std::size_t k, Rng& rng);

// Random k-tree with each edge kept independently with probability `keep`.
// The decomposition is the k-tree's, so its width is still min(k, n - 1).
DecomposedGraph random_partial_k_tree(std::size_t n, std::size_t k, double keep, Rng& rng);

// Connected chordal graph: chordal completion of a min-fill decomposition
// of a random connected graph.
Graph random_connected_chordal(std::size_t n, Rng& rng);

// Stacked triangulation on n >= 4 vertices randomised by edge flips and a
// random relabelling.
PlaneTriangulation random_triangulation(std::size_t n, Rng& rng);

PlaneTriangulation tetrahedron();
PlaneTriangulation octahedron();
PlaneTriangulation icosahedron();

// One representative of every isomorphism class of connected graphs on
// 1..max_n vertices (max_n <= 8), ordered by vertex count.
std::vector<Graph> connected_graphs(std::size_t max_n);

}  // namespace nonrep
