#include "nonrep/verify.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace nonrep {
namespace {

void check_sizes(const Graph& g, const Colouring& c) {
  if (c.size() != g.num_vertices()) {
    throw std::invalid_argument("colouring has " + std::to_string(c.size()) +
                                " entries for a graph on " +
                                std::to_string(g.num_vertices()) + " vertices");
  }
}

void check_even_cap(std::size_t cap, const char* what) {
  if (cap < 2 || cap % 2 != 0) {
    throw std::invalid_argument(std::string(what) + " must be even and at least 2");
  }
}

constexpr std::uint16_t kFar = std::numeric_limits<std::uint16_t>::max();

// Truncated BFS distances from `source`; vertices beyond `radius` stay kFar.
void bfs_distances(const Graph& g, Vertex source, std::size_t radius,
                   std::vector<std::uint16_t>& dist, std::vector<Vertex>& queue) {
  std::fill(dist.begin(), dist.end(), kFar);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    if (dist[v] >= radius) continue;
    for (Vertex w : g.neighbours(v)) {
      if (dist[w] == kFar) {
        dist[w] = static_cast<std::uint16_t>(dist[v] + 1);
        queue.push_back(w);
      }
    }
  }
}

// Shared driver for the lockstep searches. A state is the pair of partial
// halves (a_1..a_j, b_1..b_j); `Policy` decides which moves are legal and
// when a state is a hit. After a hit at depth d only depths < d are explored,
// so the first hit at the final depth is the first in DFS (lockstep) order.
template <class Policy>
class LockstepSearch {
 public:
  LockstepSearch(const Graph& g, const Colouring& c, std::size_t max_half, Policy policy)
      : g_(g), c_(c), bound_(max_half), policy_(std::move(policy)),
        dist_(g.num_vertices()) {}

  std::vector<Vertex> run() {
    const std::size_t n = g_.num_vertices();
    for (Vertex a1 = 0; a1 < n && bound_ > 0; ++a1) {
      for (Vertex b1 = 0; b1 < n && bound_ > 0; ++b1) {
        if (c_[a1] != c_[b1] || !policy_.start_ok(a1, b1)) continue;
        bfs_distances(g_, b1, bound_ + 1, dist_, queue_);
        if (dist_[a1] > bound_) continue;
        a_.assign(1, a1);
        b_.assign(1, b1);
        policy_.begin(a1, b1);
        dfs();
      }
    }
    return best_;
  }

 private:
  void dfs() {
    const std::size_t j = a_.size();
    if (policy_.hit(g_, a_, b_)) {
      best_ = a_;
      best_.insert(best_.end(), b_.begin(), b_.end());
      bound_ = j - 1;
      return;
    }
    if (j >= bound_ || !policy_.enter(a_, b_)) return;
    // A hit at depth t needs dist(a_t, b_1) <= 1, hence dist(a_{j+1}, b_1) <= t - j.
    const std::size_t slack = bound_ - j;
    policy_.for_each_move(g_, a_.back(), [&](Vertex na) {
      if (dist_[na] > slack || j >= bound_) return;
      policy_.take_a(na);
      policy_.for_each_move(g_, b_.back(), [&](Vertex nb) {
        if (j >= bound_ || c_[nb] != c_[na] || !policy_.pair_ok(na, nb)) return;
        policy_.take_b(nb);
        a_.push_back(na);
        b_.push_back(nb);
        dfs();
        a_.pop_back();
        b_.pop_back();
        policy_.release_b(nb);
      });
      policy_.release_a(na);
    });
    policy_.leave(a_, b_);
  }

  const Graph& g_;
  const Colouring& c_;
  std::size_t bound_;
  Policy policy_;
  std::vector<std::uint16_t> dist_;
  std::vector<Vertex> queue_;
  std::vector<Vertex> a_, b_, best_;
};

// Simple paths: halves disjoint, consecutive vertices adjacent, junction an edge.
struct PathPolicy {
  std::vector<char> used;

  bool start_ok(Vertex a, Vertex b) const { return a != b; }
  void begin(Vertex a, Vertex b) {
    std::fill(used.begin(), used.end(), 0);
    used[a] = used[b] = 1;
  }
  bool hit(const Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b) const {
    return g.adjacent(a.back(), b.front());
  }
  bool enter(const std::vector<Vertex>&, const std::vector<Vertex>&) { return true; }
  void leave(const std::vector<Vertex>&, const std::vector<Vertex>&) {}
  template <class F>
  void for_each_move(const Graph& g, Vertex v, F&& f) const {
    for (Vertex w : g.neighbours(v)) {
      if (!used[w]) f(w);
    }
  }
  bool pair_ok(Vertex, Vertex) const { return true; }
  void take_a(Vertex v) { used[v] = 1; }
  void take_b(Vertex v) { used[v] = 1; }
  void release_a(Vertex v) { used[v] = 0; }
  void release_b(Vertex v) { used[v] = 0; }
};

// Lazy walks; a move may stay put. Exhausted states are memoised per start
// pair: the future of a state depends only on (a_j, b_j, j, flag).
template <bool kRequireAllDistinct>
struct WalkPolicy {
  std::unordered_set<std::uint64_t> exhausted;
  std::size_t n = 0;
  bool differed = false;  // some a_i != b_i so far
  std::vector<char> differed_stack;

  bool start_ok(Vertex a, Vertex b) const { return !kRequireAllDistinct || a != b; }
  void begin(Vertex a, Vertex b) {
    exhausted.clear();
    differed_stack.assign(1, a != b);
  }
  bool hit(const Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b) const {
    if (!kRequireAllDistinct && !differed_stack.back()) return false;
    Vertex last = a.back();
    Vertex first = b.front();
    return last == first || g.adjacent(last, first);
  }
  std::uint64_t key(const std::vector<Vertex>& a, const std::vector<Vertex>& b) const {
    std::uint64_t k = std::uint64_t{a.back()} * n + b.back();
    return (k << 17) | (std::uint64_t{a.size()} << 1) | (differed_stack.back() ? 1u : 0u);
  }
  bool enter(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    return !exhausted.contains(key(a, b));
  }
  void leave(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    exhausted.insert(key(a, b));
  }
  template <class F>
  void for_each_move(const Graph& g, Vertex v, F&& f) const {
    bool self_done = false;
    for (Vertex w : g.neighbours(v)) {
      if (!self_done && v < w) {
        f(v);
        self_done = true;
      }
      f(w);
    }
    if (!self_done) f(v);
  }
  bool pair_ok(Vertex na, Vertex nb) const { return !kRequireAllDistinct || na != nb; }
  void take_a(Vertex) {}
  void take_b(Vertex) {}
  void release_a(Vertex) {}
  void release_b(Vertex) {}
};

// Tracks the "some index differs" flag alongside the lockstep stack.
struct NonBoringPolicy : WalkPolicy<false> {
  Vertex pending_a = kNoVertex;
  void take_a(Vertex v) { pending_a = v; }
  void take_b(Vertex v) { differed_stack.push_back(differed_stack.back() || pending_a != v); }
  void release_b(Vertex) { differed_stack.pop_back(); }
};

}  // namespace

Verdict is_proper(const Graph& g, const Colouring& c) {
  check_sizes(g, c);
  Verdict v;
  v.cap = 2;
  v.complete = true;
  for (Edge e : g.edges()) {
    if (c[e.u] == c[e.v]) {
      v.pass = false;
      v.counterexample = {e.u, e.v};
      break;
    }
  }
  return v;
}

Verdict find_repetitive_path(const Graph& g, const Colouring& c, std::size_t max_order) {
  check_sizes(g, c);
  check_even_cap(max_order, "max_order");
  PathPolicy policy;
  policy.used.assign(g.num_vertices(), 0);
  LockstepSearch<PathPolicy> search(g, c, max_order / 2, std::move(policy));
  Verdict v;
  v.counterexample = search.run();
  v.pass = v.counterexample.empty();
  v.cap = max_order;
  v.complete = max_order >= 2 * (g.num_vertices() / 2);
  return v;
}

Verdict find_bad_lazy_walk(const Graph& g, const Colouring& c, std::size_t max_len) {
  check_sizes(g, c);
  check_even_cap(max_len, "max_len");
  WalkPolicy<true> policy;
  policy.n = std::max<std::size_t>(g.num_vertices(), 1);
  LockstepSearch<WalkPolicy<true>> search(g, c, max_len / 2, std::move(policy));
  Verdict v;
  v.counterexample = search.run();
  v.pass = v.counterexample.empty();
  v.cap = max_len;
  v.complete = g.num_edges() == 0;
  return v;
}

Verdict find_nonboring_walk(const Graph& g, const Colouring& c, std::size_t max_len) {
  check_sizes(g, c);
  check_even_cap(max_len, "max_len");
  NonBoringPolicy policy;
  policy.n = std::max<std::size_t>(g.num_vertices(), 1);
  LockstepSearch<NonBoringPolicy> search(g, c, max_len / 2, std::move(policy));
  Verdict v;
  v.counterexample = search.run();
  v.pass = v.counterexample.empty();
  v.cap = max_len;
  v.complete = g.num_edges() == 0;
  return v;
}

bool is_lazy_walk(const Graph& g, std::span<const Vertex> walk) {
  for (Vertex v : walk) {
    if (v >= g.num_vertices()) return false;
  }
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    if (walk[i] != walk[i + 1] && !g.adjacent(walk[i], walk[i + 1])) return false;
  }
  return true;
}

bool is_repetitive(const Colouring& c, std::span<const Vertex> seq) {
  if (seq.empty() || seq.size() % 2 != 0) return false;
  const std::size_t t = seq.size() / 2;
  for (std::size_t i = 0; i < t; ++i) {
    if (c[seq[i]] != c[seq[i + t]]) return false;
  }
  return true;
}

bool is_repetitive_path(const Graph& g, const Colouring& c, std::span<const Vertex> seq) {
  std::vector<Vertex> sorted(seq.begin(), seq.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (!g.adjacent(seq[i], seq[i + 1])) return false;
  }
  return is_repetitive(c, seq);
}

bool is_bad_lazy_walk(const Graph& g, const Colouring& c, std::span<const Vertex> walk) {
  if (!is_lazy_walk(g, walk) || !is_repetitive(c, walk)) return false;
  const std::size_t k = walk.size() / 2;
  for (std::size_t i = 0; i < k; ++i) {
    if (walk[i] == walk[i + k]) return false;
  }
  return true;
}

}  // namespace nonrep
