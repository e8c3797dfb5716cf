#include "nonrep/product.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "nonrep/error.hpp"
#include "nonrep/words.hpp"

namespace nonrep {

Product strong_product(const Graph& a, const Graph& b, std::size_t max_vertices) {
  const std::size_t na = a.num_vertices();
  const std::size_t nb = b.num_vertices();
  if (nb != 0 && na > max_vertices / nb) {
    throw LimitError("strong product of " + std::to_string(na) + " x " + std::to_string(nb) +
                     " vertices exceeds the limit of " + std::to_string(max_vertices));
  }
  const ProductIndex idx{na, nb};
  GraphBuilder builder(idx.size());
  for (Vertex x = 0; x < na; ++x) {
    for (Vertex y = 0; y < nb; ++y) {
      const Vertex v = idx.index(x, y);
      for (Vertex y2 : b.neighbours(y)) {
        if (y2 > y) builder.add_edge(v, idx.index(x, y2));
      }
      for (Vertex x2 : a.neighbours(x)) {
        if (x2 < x) continue;
        builder.add_edge(v, idx.index(x2, y));
        for (Vertex y2 : b.neighbours(y)) builder.add_edge(v, idx.index(x2, y2));
      }
    }
  }
  return Product{std::move(builder).build(), idx};
}

Graph join_complete(const Graph& g, std::size_t k) {
  const std::size_t n = g.num_vertices();
  GraphBuilder b(n + k);
  for (Edge e : g.edges()) b.add_edge(e.u, e.v);
  for (std::size_t j = n; j < n + k; ++j) {
    for (Vertex v = 0; v < j; ++v) b.add_edge(v, static_cast<Vertex>(j));
  }
  return std::move(b).build();
}

Colouring compose_product_colouring(const Colouring& phi1, const Colouring& phi2,
                                    const ProductIndex& idx) {
  if (phi1.size() != idx.left_size || phi2.size() != idx.right_size) {
    throw std::invalid_argument("colouring sizes do not match the product factors");
  }
  if (phi2.palette != 0 && phi1.palette > std::numeric_limits<Colour>::max() / phi2.palette) {
    throw LimitError("product palette overflows 64 bits");
  }
  Colouring out;
  out.palette = phi1.palette * phi2.palette;
  out.colours.resize(idx.size());
  for (Vertex x = 0; x < idx.left_size; ++x) {
    for (Vertex y = 0; y < idx.right_size; ++y) {
      out.colours[idx.index(x, y)] = phi1[x] * phi2.palette + phi2[y];
    }
  }
  return out;
}

Colouring compose_path_factor(const Colouring& phi1, std::size_t m, const ProductIndex& idx) {
  if (m == 0) throw std::invalid_argument("path factor needs at least one vertex");
  if (idx.right_size != m) throw std::invalid_argument("product index does not match P_m");
  return compose_product_colouring(phi1, path_colouring_4(m), idx);
}

Colouring compose_clique_factor(const Colouring& phi1, std::size_t ell, const ProductIndex& idx) {
  if (ell < 1) throw std::invalid_argument("clique factor needs ell >= 1");
  if (idx.right_size != ell) throw std::invalid_argument("product index does not match K_ell");
  return compose_product_colouring(phi1, identity_colouring(ell), idx);
}

Colouring compose_join(const Colouring& phi, std::size_t k) {
  if (phi.palette > std::numeric_limits<Colour>::max() - k) {
    throw LimitError("join palette overflows 64 bits");
  }
  Colouring out = phi;
  for (std::size_t j = 0; j < k; ++j) out.colours.push_back(phi.palette + j);
  out.palette = phi.palette + k;
  return out;
}

}  // namespace nonrep
