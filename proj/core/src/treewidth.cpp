#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_set>

#include "nonrep/error.hpp"
#include "nonrep/tree_decomposition.hpp"

namespace nonrep {
namespace {

using Mask = std::uint64_t;

inline Mask bit(std::size_t v) { return Mask{1} << v; }

// Decides tw(G) <= k by depth-first search over sets of eliminated vertices.
// After eliminating S, v is adjacent to w iff some path from v to w has all
// inner vertices in S; this is what neighbourhood() computes.
class TreewidthSearch {
 public:
  TreewidthSearch(const Graph& g) : n_(g.num_vertices()), adj_(n_, 0) {
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex w : g.neighbours(v)) adj_[v] |= bit(w);
    }
    all_ = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
  }

  bool decide(std::size_t k) {
    k_ = k;
    failed_.clear();
    return search(0);
  }

 private:
  Mask neighbourhood(Mask eliminated, Vertex v) const {
    Mask reached = bit(v);
    Mask frontier = bit(v);
    Mask result = 0;
    while (frontier) {
      Vertex x = static_cast<Vertex>(std::countr_zero(frontier));
      frontier &= frontier - 1;
      Mask fresh = adj_[x] & ~reached;
      reached |= fresh;
      result |= fresh & ~eliminated;
      frontier |= fresh & eliminated;
    }
    return result;
  }

  bool search(Mask eliminated) {
    // Safe reductions are applied without branching: a simplicial or almost
    // simplicial vertex of degree <= k can always be eliminated next.
    std::vector<Mask> nb(n_, 0);
    for (;;) {
      Mask remaining = all_ & ~eliminated;
      if (static_cast<std::size_t>(std::popcount(remaining)) <= k_ + 1) return true;
      if (failed_.contains(eliminated)) return false;
      for (Mask r = remaining; r; r &= r - 1) {
        Vertex v = static_cast<Vertex>(std::countr_zero(r));
        nb[v] = neighbourhood(eliminated, v);
      }
      Vertex reducible = kNoVertex;
      for (Mask r = remaining; r && reducible == kNoVertex; r &= r - 1) {
        Vertex v = static_cast<Vertex>(std::countr_zero(r));
        if (static_cast<std::size_t>(std::popcount(nb[v])) > k_) continue;
        if (almost_simplicial(nb, v)) reducible = v;
      }
      if (reducible == kNoVertex) break;
      eliminated |= bit(reducible);
    }
    const Mask start = eliminated;
    Mask remaining = all_ & ~eliminated;
    for (Mask r = remaining; r; r &= r - 1) {
      Vertex v = static_cast<Vertex>(std::countr_zero(r));
      if (static_cast<std::size_t>(std::popcount(nb[v])) > k_) continue;
      if (search(start | bit(v))) return true;
    }
    failed_.insert(start);
    return false;
  }

  bool is_clique_mask(const std::vector<Mask>& nb, Mask set) const {
    for (Mask s = set; s; s &= s - 1) {
      Vertex w = static_cast<Vertex>(std::countr_zero(s));
      if ((set & ~bit(w) & ~nb[w]) != 0) return false;
    }
    return true;
  }

  // All neighbours but at most one are pairwise adjacent. If some pair a, b
  // of neighbours is non-adjacent, the exception must be a or b.
  bool almost_simplicial(const std::vector<Mask>& nb, Vertex v) const {
    for (Mask s = nb[v]; s; s &= s - 1) {
      Vertex a = static_cast<Vertex>(std::countr_zero(s));
      Mask missing = nb[v] & ~bit(a) & ~nb[a];
      if (!missing) continue;
      Vertex b = static_cast<Vertex>(std::countr_zero(missing));
      return is_clique_mask(nb, nb[v] & ~bit(a)) || is_clique_mask(nb, nb[v] & ~bit(b));
    }
    return true;
  }

  std::size_t n_;
  std::vector<Mask> adj_;
  Mask all_ = 0;
  std::size_t k_ = 0;
  std::unordered_set<Mask> failed_;
};

std::size_t degeneracy(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> deg(n);
  std::vector<char> removed(n, 0);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::size_t best = 0;
  for (std::size_t step = 0; step < n; ++step) {
    Vertex m = kNoVertex;
    for (Vertex v = 0; v < n; ++v) {
      if (!removed[v] && (m == kNoVertex || deg[v] < deg[m])) m = v;
    }
    best = std::max(best, deg[m]);
    removed[m] = 1;
    for (Vertex w : g.neighbours(m)) {
      if (!removed[w]) --deg[w];
    }
  }
  return best;
}

}  // namespace

std::size_t exact_treewidth(const Graph& g, std::size_t budget) {
  if (budget > kMaxTreewidthBudget) {
    throw LimitError("treewidth budget is capped at " + std::to_string(kMaxTreewidthBudget));
  }
  const std::size_t n = g.num_vertices();
  if (n > budget) {
    throw LimitError("exact_treewidth: " + std::to_string(n) + " vertices exceed the budget of " +
                     std::to_string(budget));
  }
  if (n == 0) return 0;
  const std::size_t upper = width(heuristic_td(g));
  std::size_t k = degeneracy(g);
  if (k >= upper) return upper;
  TreewidthSearch search(g);
  while (k < upper && !search.decide(k)) ++k;
  return k;
}

}  // namespace nonrep
