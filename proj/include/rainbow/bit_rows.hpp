#ifndef RAINBOW_BIT_ROWS_HPP
#define RAINBOW_BIT_ROWS_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "rainbow/colored_graph.hpp"

namespace rainbow {

/// One bitset row per (vertex, color): bit w of row(v, x) is set iff {v, w}
/// has color x. Pattern counting reduces to row intersections and popcounts.
class BitRows {
 public:
  using Word = std::uint64_t;

  explicit BitRows(const ColoredGraph& g);

  int vertex_count() const { return n_; }
  int color_count() const { return c_; }
  int words() const { return words_; }

  std::span<const Word> row(Vertex v, Color x) const {
    return {data_.data() + index(v, x), static_cast<std::size_t>(words_)};
  }

  bool test(Vertex v, Color x, Vertex w) const {
    return (data_[index(v, x) + (w >> 6)] >> (w & 63)) & 1U;
  }

  static int popcount_and(std::span<const Word> a, std::span<const Word> b) {
    int total = 0;
    for (std::size_t i = 0; i < a.size(); ++i) total += std::popcount(a[i] & b[i]);
    return total;
  }

  /// Calls f(w) for every set bit of a & b, in increasing order.
  template <class F>
  static void for_each_and(std::span<const Word> a, std::span<const Word> b, F&& f) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      Word bits = a[i] & b[i];
      while (bits != 0) {
        f(static_cast<Vertex>(i * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

 private:
  std::size_t index(Vertex v, Color x) const {
    return (static_cast<std::size_t>(v) * (c_ + 1) + x) * words_;
  }

  int n_;
  int c_;
  int words_;
  std::vector<Word> data_;
};

}  // namespace rainbow

#endif  // RAINBOW_BIT_ROWS_HPP
