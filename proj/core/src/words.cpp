#include "nonrep/words.hpp"

#include <stdexcept>

#include "nonrep/graph.hpp"
#include "nonrep/verify.hpp"

namespace nonrep {

Word ternary_squarefree(std::size_t n) {
  Word w{0};
  while (w.size() < n) {
    Word next;
    next.reserve(w.size() * 3);
    for (Letter x : w) {
      switch (x) {
        case 0: next.insert(next.end(), {0, 1, 2}); break;
        case 1: next.insert(next.end(), {0, 2}); break;
        default: next.push_back(1); break;
      }
    }
    w = std::move(next);
  }
  w.resize(n);
  return w;
}

std::optional<Square> find_square(std::span<const Letter> w) {
  const std::size_t n = w.size();
  std::optional<Square> best;
  // For a fixed half length h, a square starts at s iff w[i] == w[i+h] for
  // all i in [s, s+h). One left-to-right scan finds the least such s.
  for (std::size_t h = 1; 2 * h <= n; ++h) {
    std::size_t run = 0;
    const std::size_t stop = best ? std::min(n - h, best->position + h) : n - h;
    for (std::size_t i = 0; i < stop; ++i) {
      run = (w[i] == w[i + h]) ? run + 1 : 0;
      if (run == h) {
        std::size_t start = i + 1 - h;
        if (!best || start < best->position) best = Square{start, h};
        break;
      }
    }
  }
  return best;
}

Colouring path_colouring_4(std::size_t n) {
  if (n == 0) throw std::invalid_argument("path_colouring_4 needs n >= 1");
  const Word thue = ternary_squarefree((n + 4) / 5);
  Colouring c;
  c.palette = 4;
  c.colours.reserve(thue.size() * 5);
  for (Letter x : thue) {
    for (Letter y : kPathBlocks[x]) c.colours.push_back(y);
  }
  c.colours.resize(n);
  return c;
}

Verdict verify_boring(const Colouring& c, std::size_t max_len) {
  return find_nonboring_walk(path_graph(c.size()), c, max_len);
}

std::string word_to_string(std::span<const Letter> w) {
  std::string s;
  s.reserve(w.size());
  for (Letter x : w) s.push_back(static_cast<char>('0' + x));
  return s;
}

}  // namespace nonrep
