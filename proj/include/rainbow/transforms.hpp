#ifndef RAINBOW_TRANSFORMS_HPP
#define RAINBOW_TRANSFORMS_HPP

#include <span>
#include <utility>
#include <vector>

#include "rainbow/colored_graph.hpp"

namespace rainbow {

/// Largest graph a blowup may produce.
inline constexpr int kMaxBlowupVertices = 8192;

/// Blowup of `base`: vertex i becomes an independent set of sizes[i]
/// vertices and each base edge becomes a complete bipartite graph of its
/// color. With depth k > 1 (uniform sizes only) every part of the top level
/// holds a depth k-1 copy instead of an independent set, so the innermost
/// parts are independent sets of `sizes[0]` vertices and the result has
/// base.n^depth * sizes[0] vertices.
struct BlowupSpec {
  ColoredGraph base;
  std::vector<int> sizes;
  int depth = 1;

  static BlowupSpec uniform(ColoredGraph base, int part_size, int depth = 1);

  /// Throws std::invalid_argument when the blowup description is malformed.
  void validate() const;
  bool is_uniform() const;
};

/// `sigma[x - 1]` is the image of color x. Throws std::invalid_argument
/// unless sigma is a bijection on 1..c.
ColoredGraph permute_colors(const ColoredGraph& g, std::span<const Color> sigma);

/// Relabels vertices: vertex v of `g` becomes `perm[v]`.
ColoredGraph permute_vertices(const ColoredGraph& g, std::span<const Vertex> perm);

ColoredGraph blowup(const BlowupSpec& spec);

/// Induced subgraph on the vertices with at least one incident edge,
/// relabeled 0.. in their original relative order. Second member is the
/// number of vertices removed.
std::pair<ColoredGraph, int> strip_isolated(const ColoredGraph& g);

/// Induced subgraph on `vertices` (relabeled in the given order).
ColoredGraph induced_subgraph(const ColoredGraph& g, std::span<const Vertex> vertices);

/// Disjoint union with `extra` isolated vertices appended.
ColoredGraph add_isolated(const ColoredGraph& g, int extra);

}  // namespace rainbow

#endif  // RAINBOW_TRANSFORMS_HPP
