#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nonrep/colouring.hpp"

namespace nonrep {

struct Verdict;

using Letter = std::uint8_t;
using Word = std::vector<Letter>;

// Prefix of length n of the fixed point of 0 -> 012, 1 -> 02, 2 -> 1.
// The infinite word is square-free; equal for all n on common prefixes.
Word ternary_squarefree(std::size_t n);

struct Square {
  std::size_t position;
  std::size_t half_length;
  friend bool operator==(const Square&, const Square&) = default;
};

// Least factor XX by (position, half length), or nullopt if square-free.
// Exhaustive; O(n^2) time.
std::optional<Square> find_square(std::span<const Letter> w);
inline bool is_squarefree(std::span<const Letter> w) { return !find_square(w).has_value(); }

// Blocks substituted for the letters of the ternary square-free word to
// obtain the 4-colouring of a path. The image is square-free and has no
// factor aa or aba.
inline constexpr Letter kPathBlocks[3][5] = {
    {0, 1, 2, 0, 3},
    {1, 0, 2, 1, 3},
    {2, 0, 1, 2, 3},
};

/// 4-colouring of the path v_0..v_{n-1} under which every repetitive lazy
/// walk is boring (each vertex of the first half equals its partner in the
/// second half).
///
/// Square-freeness rules out a translated second half; the absence of
/// palindromes rules out a mirrored one, and it also makes the turning points
/// of a walk visible in its colour sequence. Deterministic and prefix-stable.
Colouring path_colouring_4(std::size_t n);

// Searches every lazy walk of even length <= max_len on the path coloured by
// c for one that is repetitive but not boring.
Verdict verify_boring(const Colouring& c, std::size_t max_len);

std::string word_to_string(std::span<const Letter> w);

}  // namespace nonrep
