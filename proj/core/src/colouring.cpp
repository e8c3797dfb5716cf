#include "nonrep/colouring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nonrep {

std::size_t Colouring::distinct_count() const {
  std::vector<Colour> sorted = colours;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

void Colouring::check() const {
  if (palette == 0) throw std::invalid_argument("palette must be positive");
  for (std::size_t v = 0; v < colours.size(); ++v) {
    if (colours[v] >= palette) {
      throw std::invalid_argument("colour of vertex " + std::to_string(v) +
                                  " outside palette of size " + std::to_string(palette));
    }
  }
}

Colouring constant_colouring(std::size_t n) { return {std::vector<Colour>(n, 0), 1}; }

Colouring identity_colouring(std::size_t n) {
  Colouring c{std::vector<Colour>(n), n == 0 ? 1 : n};
  for (std::size_t i = 0; i < n; ++i) c.colours[i] = i;
  return c;
}

}  // namespace nonrep
