#include "rainbow/colored_graph.hpp"

#include <stdexcept>
#include <string>

namespace rainbow {

ColoredGraph::ColoredGraph(int n, int c) : n_(n), c_(c) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (c < 1 || c > kMaxColors) {
    throw std::invalid_argument("color count must be in [1, 255], got " +
                                std::to_string(c));
  }
  colors_.assign(static_cast<std::size_t>(n) * n, kNoEdge);
}

ColoredGraph ColoredGraph::from_edges(int n, int c,
                                      std::span<const Edge> edges) {
  ColoredGraph g(n, c);
  for (const Edge& e : edges) {
    if (e.color == kNoEdge) {
      throw std::invalid_argument("edge without a color");
    }
    if (e.u >= 0 && e.u < n && e.v >= 0 && e.v < n && e.u != e.v &&
        g.has_edge(e.u, e.v)) {
      throw std::invalid_argument("duplicate pair {" + std::to_string(e.u) +
                                  "," + std::to_string(e.v) + "}");
    }
    g.set_color(e.u, e.v, e.color);
  }
  return g;
}

void ColoredGraph::set_color(Vertex u, Vertex v, Color x) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) {
    throw std::invalid_argument("vertex id out of range");
  }
  if (u == v) {
    throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  }
  if (x < 0 || x > c_) {
    throw std::invalid_argument("color " + std::to_string(x) +
                                " outside [1, " + std::to_string(c_) + "]");
  }
  auto& a = colors_[static_cast<std::size_t>(u) * n_ + v];
  auto& b = colors_[static_cast<std::size_t>(v) * n_ + u];
  if (a == kNoEdge && x != kNoEdge) ++m_;
  if (a != kNoEdge && x == kNoEdge) --m_;
  a = static_cast<std::uint8_t>(x);
  b = static_cast<std::uint8_t>(x);
}

std::vector<Edge> ColoredGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (const Color x = color(u, v); x != kNoEdge) out.push_back({u, v, x});
    }
  }
  return out;
}

int ColoredGraph::degree(Vertex v) const {
  int d = 0;
  for (Vertex w = 0; w < n_; ++w) d += has_edge(v, w) ? 1 : 0;
  return d;
}

}  // namespace rainbow
