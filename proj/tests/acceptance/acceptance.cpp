// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nonrep/bounds.hpp"
#include "nonrep/corpus.hpp"
#include "nonrep/layering.hpp"
#include "nonrep/planar_structure.hpp"
#include "nonrep/product.hpp"
#include "nonrep/tw_colouring.hpp"
#include "nonrep/verify.hpp"
#include "nonrep/words.hpp"
#include "oracles.hpp"

using namespace nonrep;

namespace {

constexpr std::size_t kPathCap = 12;
constexpr std::size_t kWalkCap = 10;

// Collects failures; the first few are printed under the criterion line.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (messages_.size() < 5) messages_.push_back(what);
  }
  bool ok() const { return failures_ == 0; }
  std::size_t failures() const { return failures_; }
  const std::vector<std::string>& messages() const { return messages_; }

 private:
  std::size_t failures_ = 0;
  std::vector<std::string> messages_;
};

// A colouring that passed the bad-lazy-walk search; criterion 9 re-checks
// it for repetitive paths at the same cap.
struct WalkCertificate {
  std::string source;
  Graph graph;
  Colouring colouring;
  Verdict walk;
};

std::vector<WalkCertificate> g_certificates;

void certify(Check& check, const std::string& label, const Graph& g, const Colouring& c,
             std::size_t path_cap, std::size_t walk_cap, bool need_complete = false) {
  const Verdict proper = is_proper(g, c);
  check.expect(proper.pass, label + ": not proper");
  const Verdict path = find_repetitive_path(g, c, path_cap);
  check.expect(path.pass, label + ": repetitive path");
  if (need_complete) check.expect(path.complete, label + ": path search incomplete");
  const Verdict walk = find_bad_lazy_walk(g, c, walk_cap);
  check.expect(walk.pass, label + ": bad lazy walk");
  g_certificates.push_back({label, g, c, walk});
}

bool report(int id, const std::string& title, double limit_seconds,
            const std::function<void(Check&)>& body) {
  Check check;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.expect(false, std::string("exception: ") + e.what());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && seconds > limit_seconds) {
    std::ostringstream s;
    s << "runtime " << seconds << " s exceeds " << limit_seconds << " s";
    check.expect(false, s.str());
  }
  std::printf("[%s] criterion %d: %s (%.2f s)\n", check.ok() ? "PASS" : "FAIL", id, title.c_str(),
              seconds);
  for (const auto& m : check.messages()) std::printf("       %s\n", m.c_str());
  if (check.failures() > check.messages().size()) {
    std::printf("       ... %zu failures in total\n", check.failures());
  }
  std::fflush(stdout);
  return check.ok();
}

void criterion_thue(Check& check) {
  const Word longest = ternary_squarefree(5000);
  check.expect(longest.size() == 5000, "wrong length");
  check.expect(!oracle::has_square(longest), "square in the 5000-letter prefix");
  check.expect(is_squarefree(longest), "find_square reports a square");
  // Every shorter word is a prefix, hence a factor of a square-free word.
  for (std::size_t n = 0; n < 5000; ++n) {
    const Word w = ternary_squarefree(n);
    if (!std::equal(w.begin(), w.end(), longest.begin())) {
      check.expect(false, "n=" + std::to_string(n) + " is not a prefix");
    }
  }
}

void criterion_path(Check& check) {
  for (std::size_t n = 1; n <= 60; ++n) {
    const Colouring c = path_colouring_4(n);
    check.expect(c.palette == 4, "palette");
    check.expect(verify_boring(c, 12).pass, "n=" + std::to_string(n) + " cap 12");
    if (n <= 30) check.expect(verify_boring(c, 14).pass, "n=" + std::to_string(n) + " cap 14");
  }
}

void criterion_treewidth(Check& check) {
  std::size_t index = 0;
  for (const Graph& g : connected_graphs(7)) {
    const TreeDecomposition td = heuristic_td(g);
    const Colouring c = strongly_nonrepetitive_colouring(g, td);
    const std::string label = "small graph #" + std::to_string(index++);
    check.expect(c.palette == Colour{1} << (2 * width(td)), label + ": palette");
    check.expect(c.distinct_count() <= c.palette, label + ": distinct > palette");
    certify(check, label, g, c, std::max<std::size_t>(2, 2 * (g.num_vertices() / 2)), kWalkCap,
            true);
  }
  Rng rng(2025);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 10 + rng() % 21;
    const DecomposedGraph d = random_partial_k_tree(n, 3, 0.75, rng);
    const Colouring c = strongly_nonrepetitive_colouring(d.graph, d.td);
    const std::string label = "partial 3-tree #" + std::to_string(i);
    check.expect(c.palette <= 64, label + ": palette above 4^3");
    certify(check, label, d.graph, c, kPathCap, kWalkCap);
  }
}

void criterion_shadows(Check& check) {
  Rng rng(4242);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_connected_chordal(2 + rng() % 11, rng);
    for (Vertex root = 0; root < g.num_vertices(); ++root) {
      if (!is_shadow_complete(g, bfs_layering(g, root))) {
        check.expect(false, "chordal graph #" + std::to_string(i) + " root " +
                                std::to_string(root));
      }
    }
  }
  const Graph c6 = cycle_graph(6);
  check.expect(!is_shadow_complete(c6, bfs_layering(c6, 0)), "C6 negative control passed");
}

void criterion_products(Check& check) {
  Rng rng(77);
  for (int i = 0; i < 12; ++i) {
    const std::size_t hn = 3 + rng() % 6;
    const DecomposedGraph h = random_partial_k_tree(hn, 1 + i % 3, 0.8, rng);
    const Colouring phi = strongly_nonrepetitive_colouring(h.graph, h.td);
    const Colour p = phi.palette;
    const std::string tag = "product #" + std::to_string(i);

    const std::size_t m = 2 + rng() % 10;
    const Product hp = strong_product(h.graph, path_graph(m));
    const Colouring c_path = compose_path_factor(phi, m, hp.index);
    check.expect(c_path.palette == 4 * p, tag + ": path factor palette");
    check.expect(c_path.distinct_count() <= 4 * p, tag + ": path factor distinct");
    certify(check, tag + " H x P", hp.graph, c_path, kPathCap, kWalkCap);

    const std::size_t ell = 1 + rng() % 3;
    const Product hpk = strong_product(hp.graph, complete_graph(ell));
    if (hpk.graph.num_vertices() <= 400) {
      const Colouring c_clique = compose_clique_factor(c_path, ell, hpk.index);
      check.expect(c_clique.palette == ell * c_path.palette, tag + ": clique factor palette");
      check.expect(c_clique.distinct_count() <= ell * c_path.palette,
                   tag + ": clique factor distinct");
      certify(check, tag + " H x P x K", hpk.graph, c_clique, kPathCap, kWalkCap);
    }

    const std::size_t k = 1 + rng() % 3;
    const Graph joined = join_complete(h.graph, k);
    const Colouring c_join = compose_join(phi, k);
    check.expect(c_join.palette == p + k, tag + ": join palette");
    certify(check, tag + " join", joined, c_join, kPathCap, kWalkCap);
  }
}

void criterion_planar(Check& check) {
  std::vector<std::pair<std::string, PlaneTriangulation>> corpus = {
      {"K4", tetrahedron()}, {"octahedron", octahedron()}, {"icosahedron", icosahedron()}};
  Rng rng(1234);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 4 + rng() % 57;
    corpus.emplace_back("triangulation #" + std::to_string(i) + " (n=" + std::to_string(n) + ")",
                        random_triangulation(n, rng));
  }
  for (const auto& [label, t] : corpus) {
    const Graph& g = t.graph();
    const ProductStructure s = compute_product_structure(t);
    check.expect(!validate_product_structure(g, s).has_value(), label + ": invalid structure");
    check.expect(s.ell == 3, label + ": ell");
    if (s.h.num_vertices() <= kMaxTreewidthBudget) {
      check.expect(exact_treewidth(s.h, kMaxTreewidthBudget) <= 3, label + ": tw(H) > 3");
    } else {
      check.expect(width(heuristic_td(s.h)) <= 3, label + ": heuristic width of H > 3");
    }
    const PipelineResult r = colour_planar(g, s);
    check.expect(r.certified, label + ": not certified");
    check.expect(r.colouring.palette <= 768, label + ": palette above 768");
    check.expect(r.colouring.distinct_count() <= 768, label + ": more than 768 colours");
    certify(check, label, g, r.colouring, kPathCap, kWalkCap);
  }
}

void criterion_exact_pi(Check& check) {
  for (std::size_t n = 4; n <= 10; ++n) {
    check.expect(exact_pi(path_graph(n)) == 3, "P" + std::to_string(n));
  }
  check.expect(exact_pi(path_graph(2)) == 2, "P2");
  check.expect(exact_pi(path_graph(3)) == 2, "P3");
  // Frozen from a brute-force enumeration.
  const std::size_t cycles[] = {3, 4, 3, 4, 3};
  for (std::size_t n = 4; n <= 8; ++n) {
    check.expect(exact_pi(cycle_graph(n)) == cycles[n - 4], "C" + std::to_string(n));
  }
  for (std::size_t n = 4; n <= 6; ++n) {
    check.expect(oracle::pi_by_enumeration(cycle_graph(n), 4) == cycles[n - 4],
                 "oracle C" + std::to_string(n));
  }
}

void criterion_bounds(Check& check) {
  check.expect(bound_planar() == 768, "planar");
  for (std::int64_t g : {0, 1, 2, 5}) {
    check.expect(bound_genus(g) == 256 * std::max<std::int64_t>(2 * g, 3),
                 "genus " + std::to_string(g));
  }
  check.expect(bound_treewidth(0) == 1, "tw 0");
  check.expect(bound_treewidth(1) == 4, "tw 1");
  check.expect(bound_treewidth(3) == 64, "tw 3");
  BigInt four_22 = 1;
  for (int i = 0; i < 22; ++i) four_22 *= 4;
  check.expect(bound_almost_embeddable(1) == 1 + 6 * four_22, "almost embeddable 1");
  check.expect(bound_almost_embeddable(1) == BigInt("105553116266497"), "almost embeddable 1");
  for (std::int64_t k = 1; k <= 3; ++k) {
    for (std::int64_t r = 1; r <= 3; ++r) {
      check.expect(bound_minor(k, r) == bound_rich(bound_almost_embeddable(k), r),
                   "minor identity k=" + std::to_string(k) + " r=" + std::to_string(r));
    }
  }
}

void criterion_strong_implies_plain(Check& check) {
  check.expect(!g_certificates.empty(), "no certificates recorded");
  for (const auto& cert : g_certificates) {
    if (!cert.walk.pass) continue;
    const Verdict path = find_repetitive_path(cert.graph, cert.colouring, cert.walk.cap);
    check.expect(path.pass, cert.source + ": walk pass but repetitive path at the same cap");
  }
  std::printf("       %zu certificates cross-checked at cap %zu\n", g_certificates.size(),
              kWalkCap);
}

}  // namespace

int main() {
  bool ok = true;
  ok &= report(1, "ternary square-free prefixes up to 5000", 10, criterion_thue);
  ok &= report(2, "path 4-colouring: every repetitive lazy walk is boring", 60, criterion_path);
  ok &= report(3, "treewidth colouring within 4^k and strongly nonrepetitive", 300,
               criterion_treewidth);
  ok &= report(4, "BFS layerings of chordal graphs are shadow-complete", 0, criterion_shadows);
  ok &= report(5, "product compositions: palette arithmetic and verifiers", 0, criterion_products);
  ok &= report(6, "planar pipeline within 768 colours", 600, criterion_planar);
  ok &= report(7, "exact pi agrees on paths and cycles", 0, criterion_exact_pi);
  ok &= report(8, "bounds calculator", 0, criterion_bounds);
  ok &= report(9, "strong nonrepetitiveness implies nonrepetitiveness on every certificate", 0,
               criterion_strong_implies_plain);
  std::printf("%s\n", ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return ok ? 0 : 1;
}
