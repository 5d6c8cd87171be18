#include "rainbow/canonical.hpp"

#include <stdexcept>

namespace rainbow {

namespace {

constexpr int kStride = kMaxCanonVertices;
constexpr int kMaxPairs = kMaxCanonVertices * (kMaxCanonVertices - 1) / 2;

// Vertex relabeling search shared by the canonicity test and the canonical
// form. perm[k] is the vertex of g placed at position k; the code of the
// relabeled graph is built column by column. With color symmetry, colors are
// mapped lazily: the first time a color shows up it gets the smallest unused
// value, which is the best choice for a lexicographic minimum.
class RelabelSearch {
 public:
  RelabelSearch(const SmallGraph& g, bool modulo_colors)
      : g_(g), colors_(modulo_colors) {
    for (auto& x : sigma_) x = 0;
  }

  bool is_canonical() { return g_.n < 2 || test(0); }

  SmallGraph best_form() {
    if (g_.n >= 2) minimize(0);
    SmallGraph out;
    out.n = g_.n;
    out.c = g_.c;
    if (g_.n < 2) {
      out = g_;
      return out;
    }
    int idx = 0;
    for (int k = 1; k < g_.n; ++k) {
      for (int i = 0; i < k; ++i) out.set(i, k, best_[idx++]);
    }
    return out;
  }

 private:
  // Maps a state through the current color map, extending it if needed.
  // Returns the image and records the extension on `undo`.
  std::uint8_t map_color(std::uint8_t x, int& undo_count, std::uint8_t* undo) {
    if (x == 0 || !colors_) return x;
    if (sigma_[x] == 0) {
      while (target_used_[next_free_]) ++next_free_;
      sigma_[x] = static_cast<std::uint8_t>(next_free_);
      target_used_[next_free_] = true;
      undo[undo_count++] = x;
    }
    return sigma_[x];
  }

  void undo_colors(int undo_count, const std::uint8_t* undo) {
    for (int i = 0; i < undo_count; ++i) {
      const std::uint8_t x = undo[i];
      const std::uint8_t t = sigma_[x];
      target_used_[t] = false;
      if (t < next_free_) next_free_ = t;
      sigma_[x] = 0;
    }
  }

  // False as soon as some relabeling gives a smaller code.
  bool test(int k) {
    for (int w = 0; w < g_.n; ++w) {
      if (used_ & (1u << w)) continue;
      std::uint8_t undo[kMaxCanonVertices];
      int undo_count = 0;
      int cmp = 0;
      for (int i = 0; i < k; ++i) {
        const std::uint8_t h = map_color(g_.s[perm_[i] * kStride + w], undo_count, undo);
        const std::uint8_t mine = g_.s[i * kStride + k];
        if (h != mine) {
          cmp = h < mine ? -1 : 1;
          break;
        }
      }
      if (cmp < 0) return false;
      if (cmp == 0 && k + 1 < g_.n) {
        perm_[k] = w;
        used_ |= 1u << w;
        const bool ok = test(k + 1);
        used_ &= ~(1u << w);
        if (!ok) return false;
      }
      undo_colors(undo_count, undo);
    }
    return true;
  }

  // Branch and bound for the smallest code. A prefix is explored only while
  // it is not larger than the best code's prefix of the same length.
  void minimize(int k) {
    const int base = k * (k - 1) / 2;
    for (int w = 0; w < g_.n; ++w) {
      if (used_ & (1u << w)) continue;
      std::uint8_t undo[kMaxCanonVertices];
      int undo_count = 0;
      for (int i = 0; i < k; ++i) {
        cur_[base + i] = map_color(g_.s[perm_[i] * kStride + w], undo_count, undo);
      }
      const int cmp = have_best_ ? compare_prefix(base + k) : -1;
      if (cmp <= 0) {
        perm_[k] = w;
        used_ |= 1u << w;
        if (k + 1 < g_.n) {
          minimize(k + 1);
        } else if (cmp < 0) {
          best_ = cur_;
          have_best_ = true;
        }
        used_ &= ~(1u << w);
      }
      undo_colors(undo_count, undo);
    }
  }

  int compare_prefix(int len) const {
    for (int i = 0; i < len; ++i) {
      if (cur_[i] != best_[i]) return cur_[i] > best_[i] ? 1 : -1;
    }
    return 0;
  }

  const SmallGraph& g_;
  bool colors_;
  int perm_[kMaxCanonVertices]{};
  unsigned used_ = 0;
  std::uint8_t sigma_[kMaxCanonColors + 1];
  bool target_used_[kMaxCanonColors + 1]{};
  int next_free_ = 1;
  std::array<std::uint8_t, kMaxPairs> cur_{};
  std::array<std::uint8_t, kMaxPairs> best_{};
  bool have_best_ = false;
};

void require_small(const ColoredGraph& g) {
  if (g.vertex_count() > kMaxCanonVertices) {
    throw std::invalid_argument("canonical forms support at most " +
                                std::to_string(kMaxCanonVertices) + " vertices");
  }
  if (g.color_count() > kMaxCanonColors) {
    throw std::invalid_argument("canonical forms support at most " +
                                std::to_string(kMaxCanonColors) + " colors");
  }
}

}  // namespace

SmallGraph SmallGraph::from(const ColoredGraph& g) {
  require_small(g);
  SmallGraph s;
  s.n = g.vertex_count();
  s.c = g.color_count();
  for (const Edge& e : g.edges()) s.set(e.u, e.v, static_cast<std::uint8_t>(e.color));
  return s;
}

ColoredGraph SmallGraph::to_graph() const {
  ColoredGraph g(n, c);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (at(i, j) != 0) g.set_color(i, j, at(i, j));
    }
  }
  return g;
}

std::string SmallGraph::code() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) out.push_back("0123456789abcdef"[at(i, j)]);
  }
  return out;
}

bool is_canonical(const SmallGraph& g, bool modulo_colors) {
  return RelabelSearch(g, modulo_colors).is_canonical();
}

SmallGraph canonical_form(const SmallGraph& g, bool modulo_colors) {
  return RelabelSearch(g, modulo_colors).best_form();
}

bool is_canonical(const ColoredGraph& g, bool modulo_colors) {
  return is_canonical(SmallGraph::from(g), modulo_colors);
}

ColoredGraph canonical_form(const ColoredGraph& g, bool modulo_colors) {
  return canonical_form(SmallGraph::from(g), modulo_colors).to_graph();
}

}  // namespace rainbow
