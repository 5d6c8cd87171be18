#ifndef RAINBOW_COLORED_GRAPH_HPP
#define RAINBOW_COLORED_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rainbow {

using Vertex = int;

/// Edge colors are 1..c. 0 is reserved for "no edge" and never stored as a
/// color. For three colors the convention is red = 1, green = 2, blue = 3.
using Color = int;

inline constexpr Color kNoEdge = 0;
inline constexpr Color kRed = 1;
inline constexpr Color kGreen = 2;
inline constexpr Color kBlue = 3;
inline constexpr int kMaxColors = 255;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Color color = kNoEdge;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A simple graph on vertices 0..n-1 where every edge carries one color in
/// 1..c. Stored as a dense symmetric color matrix; intended for graphs with
/// at most a few thousand vertices.
class ColoredGraph {
 public:
  ColoredGraph() = default;

  /// Empty graph on `n` vertices with `c` available colors.
  /// Throws std::invalid_argument if n < 0 or c is outside [1, kMaxColors].
  ColoredGraph(int n, int c);

  static ColoredGraph from_edges(int n, int c, std::span<const Edge> edges);

  int vertex_count() const { return n_; }
  int color_count() const { return c_; }
  std::size_t edge_count() const { return m_; }

  Color color(Vertex u, Vertex v) const {
    return colors_[static_cast<std::size_t>(u) * n_ + v];
  }
  bool has_edge(Vertex u, Vertex v) const { return color(u, v) != kNoEdge; }

  /// Sets the color of {u, v}; kNoEdge removes the edge. Throws
  /// std::invalid_argument on self-loops or out-of-range ids and colors.
  void set_color(Vertex u, Vertex v, Color x);

  /// All edges with u < v, sorted by (u, v).
  std::vector<Edge> edges() const;

  /// Number of edges at `v`.
  int degree(Vertex v) const;

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  int n_ = 0;
  int c_ = 1;
  std::size_t m_ = 0;
  std::vector<std::uint8_t> colors_;
};

}  // namespace rainbow

#endif  // RAINBOW_COLORED_GRAPH_HPP
