#include "rainbow/transforms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rainbow {

BlowupSpec BlowupSpec::uniform(ColoredGraph base, int part_size, int depth) {
  if (part_size < 1) throw std::invalid_argument("uniform part size must be >= 1");
  const auto n = static_cast<std::size_t>(base.vertex_count());
  return BlowupSpec{std::move(base), std::vector<int>(n, part_size), depth};
}

bool BlowupSpec::is_uniform() const {
  return std::adjacent_find(sizes.begin(), sizes.end(),
                            std::not_equal_to<>()) == sizes.end();
}

void BlowupSpec::validate() const {
  if (sizes.size() != static_cast<std::size_t>(base.vertex_count())) {
    throw std::invalid_argument("sizes has " + std::to_string(sizes.size()) +
                                " entries, base has " +
                                std::to_string(base.vertex_count()) +
                                " vertices");
  }
  if (std::any_of(sizes.begin(), sizes.end(), [](int s) { return s < 0; })) {
    throw std::invalid_argument("negative part size");
  }
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  if (depth > 1 && (sizes.empty() || !is_uniform() || sizes[0] < 1)) {
    throw std::invalid_argument("iterated blowup needs uniform sizes >= 1");
  }
  // Vertex budget.
  long long total = 0;
  if (depth == 1) {
    for (int s : sizes) total += s;
  } else {
    total = sizes[0];
    for (int k = 0; k < depth && total <= kMaxBlowupVertices; ++k) {
      total *= base.vertex_count();
    }
  }
  if (total > kMaxBlowupVertices) {
    throw std::invalid_argument("blowup exceeds " +
                                std::to_string(kMaxBlowupVertices) +
                                " vertices");
  }
}

ColoredGraph permute_colors(const ColoredGraph& g,
                            std::span<const Color> sigma) {
  const int c = g.color_count();
  if (sigma.size() != static_cast<std::size_t>(c)) {
    throw std::invalid_argument("color permutation has wrong length");
  }
  std::vector<bool> seen(c + 1, false);
  for (Color x : sigma) {
    if (x < 1 || x > c || seen[x]) {
      throw std::invalid_argument("not a permutation of the colors");
    }
    seen[x] = true;
  }
  ColoredGraph out(g.vertex_count(), c);
  for (const Edge& e : g.edges()) out.set_color(e.u, e.v, sigma[e.color - 1]);
  return out;
}

ColoredGraph permute_vertices(const ColoredGraph& g,
                              std::span<const Vertex> perm) {
  const int n = g.vertex_count();
  if (perm.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("vertex permutation has wrong length");
  }
  std::vector<bool> seen(n, false);
  for (Vertex v : perm) {
    if (v < 0 || v >= n || seen[v]) {
      throw std::invalid_argument("not a permutation of the vertices");
    }
    seen[v] = true;
  }
  ColoredGraph out(n, g.color_count());
  for (const Edge& e : g.edges()) out.set_color(perm[e.u], perm[e.v], e.color);
  return out;
}

namespace {

ColoredGraph plain_blowup(const ColoredGraph& base, std::span<const int> sizes) {
  const int k = base.vertex_count();
  std::vector<int> offset(k + 1, 0);
  for (int i = 0; i < k; ++i) offset[i + 1] = offset[i] + sizes[i];
  ColoredGraph out(offset[k], base.color_count());
  for (const Edge& e : base.edges()) {
    for (Vertex a = offset[e.u]; a < offset[e.u + 1]; ++a) {
      for (Vertex b = offset[e.v]; b < offset[e.v + 1]; ++b) {
        out.set_color(a, b, e.color);
      }
    }
  }
  return out;
}

// Each base vertex is replaced by a copy of `inner`.
ColoredGraph substitute(const ColoredGraph& base, const ColoredGraph& inner) {
  const int k = base.vertex_count();
  const int s = inner.vertex_count();
  ColoredGraph out(k * s, base.color_count());
  const auto inner_edges = inner.edges();
  for (int part = 0; part < k; ++part) {
    for (const Edge& e : inner_edges) {
      out.set_color(part * s + e.u, part * s + e.v, e.color);
    }
  }
  for (const Edge& e : base.edges()) {
    for (Vertex a = 0; a < s; ++a) {
      for (Vertex b = 0; b < s; ++b) {
        out.set_color(e.u * s + a, e.v * s + b, e.color);
      }
    }
  }
  return out;
}

}  // namespace

ColoredGraph blowup(const BlowupSpec& spec) {
  spec.validate();
  ColoredGraph g = plain_blowup(spec.base, spec.sizes);
  for (int level = 1; level < spec.depth; ++level) g = substitute(spec.base, g);
  return g;
}

std::pair<ColoredGraph, int> strip_isolated(const ColoredGraph& g) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 0) keep.push_back(v);
  }
  const int removed = g.vertex_count() - static_cast<int>(keep.size());
  return {induced_subgraph(g, keep), removed};
}

ColoredGraph induced_subgraph(const ColoredGraph& g,
                              std::span<const Vertex> vertices) {
  const int k = static_cast<int>(vertices.size());
  ColoredGraph out(k, g.color_count());
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (const Color x = g.color(vertices[i], vertices[j]); x != kNoEdge) {
        out.set_color(i, j, x);
      }
    }
  }
  return out;
}

ColoredGraph add_isolated(const ColoredGraph& g, int extra) {
  if (extra < 0) throw std::invalid_argument("negative vertex count");
  ColoredGraph out(g.vertex_count() + extra, g.color_count());
  for (const Edge& e : g.edges()) out.set_color(e.u, e.v, e.color);
  return out;
}

}  // namespace rainbow
