#ifndef RAINBOW_CANONICAL_HPP
#define RAINBOW_CANONICAL_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rainbow/colored_graph.hpp"

namespace rainbow {

/// Largest vertex count handled by canonical forms and enumeration.
inline constexpr int kMaxCanonVertices = 10;
/// Largest color count handled by canonical forms and enumeration.
inline constexpr int kMaxCanonColors = 15;

/// Fixed-capacity pair-state matrix used on the enumeration hot path.
/// State 0 is "no edge", 1..c are colors.
struct SmallGraph {
  int n = 0;
  int c = 1;
  std::array<std::uint8_t, kMaxCanonVertices * kMaxCanonVertices> s{};

  std::uint8_t at(int i, int j) const { return s[i * kMaxCanonVertices + j]; }
  void set(int i, int j, std::uint8_t x) {
    s[i * kMaxCanonVertices + j] = x;
    s[j * kMaxCanonVertices + i] = x;
  }

  static SmallGraph from(const ColoredGraph& g);
  ColoredGraph to_graph() const;

  /// States of (0,1), (0,2), (1,2), (0,3), ... ; the code of the subgraph on
  /// the first k vertices is a prefix of the code of the whole graph.
  std::string code() const;
};

// A graph is canonical when its code is lexicographically smallest among all
// vertex relabelings (and, with `modulo_colors`, all color renamings). Since
// codes of induced subgraphs on 0..k-1 are prefixes, deleting the last vertex
// of a canonical graph leaves a canonical graph; orderly generation relies on
// this.

bool is_canonical(const SmallGraph& g, bool modulo_colors);
SmallGraph canonical_form(const SmallGraph& g, bool modulo_colors);

/// Throws std::invalid_argument beyond kMaxCanonVertices / kMaxCanonColors.
bool is_canonical(const ColoredGraph& g, bool modulo_colors);
ColoredGraph canonical_form(const ColoredGraph& g, bool modulo_colors);

}  // namespace rainbow

#endif  // RAINBOW_CANONICAL_HPP
