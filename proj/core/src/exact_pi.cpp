#include <algorithm>
#include <stdexcept>
#include <string>

#include "nonrep/error.hpp"
#include "nonrep/verify.hpp"

namespace nonrep {
namespace {

// Backtracking over colourings of vertices 0..n-1 in index order. A
// repetition created by colouring v must lie on a path through v, so only
// those paths are examined after each assignment.
class PiSearch {
 public:
  PiSearch(const Graph& g, std::size_t colours)
      : g_(g), colours_(colours), colour_(g.num_vertices(), kUncoloured),
        on_path_(g.num_vertices(), 0) {}

  bool run() { return assign(0, 0); }

 private:
  static constexpr std::size_t kUncoloured = static_cast<std::size_t>(-1);

  bool assign(Vertex v, std::size_t used) {
    if (v == g_.num_vertices()) return true;
    // Colours are interchangeable: never open more than one new colour.
    const std::size_t limit = std::min(colours_, used + 1);
    for (std::size_t col = 0; col < limit; ++col) {
      colour_[v] = col;
      if (!repetition_through(v) && assign(v + 1, std::max(used, col + 1))) return true;
    }
    colour_[v] = kUncoloured;
    return false;
  }

  bool coloured(Vertex w) const { return colour_[w] != kUncoloured; }

  bool repetition_through(Vertex v) {
    right_.assign(1, v);
    on_path_[v] = 1;
    bool found = extend_right();
    on_path_[v] = 0;
    return found;
  }

  // right_ = v, r_1, ..., r_a; every extension is combined with every
  // disjoint left arm from v.
  bool extend_right() {
    left_.assign(1, right_.front());
    if (extend_left()) return true;
    for (Vertex w : g_.neighbours(right_.back())) {
      if (!coloured(w) || on_path_[w]) continue;
      on_path_[w] = 1;
      right_.push_back(w);
      bool found = extend_right();
      right_.pop_back();
      on_path_[w] = 0;
      if (found) return true;
    }
    return false;
  }

  bool extend_left() {
    if (check_current()) return true;
    for (Vertex w : g_.neighbours(left_.back())) {
      if (!coloured(w) || on_path_[w]) continue;
      on_path_[w] = 1;
      left_.push_back(w);
      bool found = extend_left();
      left_.pop_back();
      on_path_[w] = 0;
      if (found) return true;
    }
    return false;
  }

  bool check_current() {
    const std::size_t order = left_.size() + right_.size() - 1;
    if (order < 2 || order % 2 != 0) return false;
    path_.clear();
    for (auto it = left_.rbegin(); it != left_.rend(); ++it) path_.push_back(*it);
    path_.insert(path_.end(), right_.begin() + 1, right_.end());
    const std::size_t t = order / 2;
    for (std::size_t i = 0; i < t; ++i) {
      if (colour_[path_[i]] != colour_[path_[i + t]]) return false;
    }
    return true;
  }

  const Graph& g_;
  std::size_t colours_;
  std::vector<std::size_t> colour_;
  std::vector<char> on_path_;
  std::vector<Vertex> left_, right_, path_;
};

}  // namespace

std::optional<std::size_t> exact_pi(const Graph& g, std::size_t max_colours) {
  if (g.num_vertices() > kExactPiMaxVertices) {
    throw LimitError("exact_pi is limited to " + std::to_string(kExactPiMaxVertices) +
                     " vertices");
  }
  if (max_colours > kExactPiMaxColours) {
    throw LimitError("exact_pi is limited to " + std::to_string(kExactPiMaxColours) +
                     " colours");
  }
  if (g.num_vertices() == 0) return 0;
  for (std::size_t p = 1; p <= max_colours; ++p) {
    if (PiSearch(g, p).run()) return p;
  }
  return std::nullopt;
}

}  // namespace nonrep
