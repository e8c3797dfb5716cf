#pragma once

#include <cstddef>
#include <utility>

#include "nonrep/colouring.hpp"
#include "nonrep/graph.hpp"

namespace nonrep {

/// Row-major coordinates of A ⊠ B: (a, b) <-> a * |V(B)| + b.
struct ProductIndex {
  std::size_t left_size = 0;
  std::size_t right_size = 0;

  std::size_t size() const noexcept { return left_size * right_size; }
  Vertex index(Vertex a, Vertex b) const {
    return static_cast<Vertex>(a * right_size + b);
  }
  std::pair<Vertex, Vertex> coords(Vertex v) const {
    return {static_cast<Vertex>(v / right_size), static_cast<Vertex>(v % right_size)};
  }
};

struct Product {
  Graph graph;
  ProductIndex index;
};

inline constexpr std::size_t kDefaultProductLimit = 1'000'000;

// Strong product: (a, b) ~ (a', b') iff they differ and each coordinate is
// equal or adjacent. Throws LimitError above `max_vertices`.
Product strong_product(const Graph& a, const Graph& b,
                       std::size_t max_vertices = kDefaultProductLimit);

// G plus k vertices n..n+k-1 adjacent to everything, including each other.
Graph join_complete(const Graph& g, std::size_t k);

// phi(a, b) = phi1(a) * p2 + phi2(b), palette p1 * p2. phi1 must be strongly
// nonrepetitive and every phi2-repetitive lazy walk must be boring; neither
// is checked here.
Colouring compose_product_colouring(const Colouring& phi1, const Colouring& phi2,
                                    const ProductIndex& idx);

// Second factor P_m coloured by path_colouring_4(m).
Colouring compose_path_factor(const Colouring& phi1, std::size_t m, const ProductIndex& idx);

// Second factor K_ell with every vertex its own colour.
Colouring compose_clique_factor(const Colouring& phi1, std::size_t ell, const ProductIndex& idx);

// Join vertices get the fresh colours p..p+k-1; palette p + k.
Colouring compose_join(const Colouring& phi, std::size_t k);

}  // namespace nonrep
