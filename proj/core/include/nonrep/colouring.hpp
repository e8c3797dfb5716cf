#pragma once

#include <cstdint>
#include <vector>

namespace nonrep {

using Colour = std::uint64_t;

/// Total vertex colouring with palette indices in [0, palette).
///
/// `palette` is the size of the code space a construction draws from (for
/// example 4^k for treewidth colourings); distinct_count() is the number of
/// codes actually used and never exceeds it.
struct Colouring {
  std::vector<Colour> colours;
  Colour palette = 1;

  std::size_t size() const noexcept { return colours.size(); }
  Colour operator[](std::size_t v) const { return colours[v]; }

  std::size_t distinct_count() const;

  // Throws std::invalid_argument if some colour is >= palette.
  void check() const;

  friend bool operator==(const Colouring&, const Colouring&) = default;
};

Colouring constant_colouring(std::size_t n);
Colouring identity_colouring(std::size_t n);

}  // namespace nonrep
