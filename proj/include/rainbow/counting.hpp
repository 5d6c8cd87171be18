#ifndef RAINBOW_COUNTING_HPP
#define RAINBOW_COUNTING_HPP

#include <vector>

#include "rainbow/bit_rows.hpp"
#include "rainbow/colored_graph.hpp"
#include "rainbow/exact.hpp"

namespace rainbow {

/// Which colors play red, green and blue. The default is 1, 2, 3; other
/// assignments express "the same argument with permuted colors".
struct ColorRoles {
  Color red = kRed;
  Color green = kGreen;
  Color blue = kBlue;

  friend bool operator==(const ColorRoles&, const ColorRoles&) = default;
};

/// Per-color edge totals, indexed by color (index 0 unused).
struct ColorCounts {
  std::vector<Count> per_color;

  Count of(Color x) const { return per_color.at(static_cast<std::size_t>(x)); }
  Count red() const { return of(kRed); }
  Count green() const { return of(kGreen); }
  Count blue() const { return of(kBlue); }
  Count total() const;
};

struct DegreeProfile {
  Vertex vertex = 0;
  std::vector<Count> per_color_degree;  // index 0 unused

  Count degree() const;
};

/// Statistics of an ordered red pair (u, v):
///   d_plus  = #{w : uw blue,  vw green}
///   d_minus = #{w : uw green, vw blue}
///   d_k     = #{ordered red pairs (w, x) : uw, vx green and ux, vw blue}
struct RedPairStats {
  Vertex u = 0;
  Vertex v = 0;
  Count d_plus = 0;
  Count d_minus = 0;
  Count d_k = 0;
};

/// Sums of the red-pair statistics over all ordered red pairs.
struct RedPairSums {
  Count ordered_red_pairs = 0;
  Count sum_d_plus = 0;
  Count sum_d_minus = 0;
  Count sum_d_plus_sq = 0;
  Count sum_d_minus_sq = 0;
  Count sum_d_minus_d_plus = 0;
  Count sum_d_k = 0;
};

/// Shares one BitRows index between several counts on the same graph.
class GraphCounter {
 public:
  explicit GraphCounter(const ColoredGraph& g);

  const ColoredGraph& graph() const { return g_; }

  ColorCounts color_counts() const;
  DegreeProfile degree_profile(Vertex v) const;

  /// Triangles whose three edges carry three distinct colors (any colors).
  Count rainbow_triangles() const;
  /// Rainbow triangles colored exactly {roles.red, roles.green, roles.blue}.
  Count rainbow_triangles(const ColorRoles& roles) const;

  /// K4s whose perfect matchings are monochromatic in three distinct colors.
  Count proper_k4() const;
  Count proper_k4(const ColorRoles& roles) const;

  /// K4s with six distinct edge colors.
  Count rainbow_k4() const;

  /// Copies of `pattern` (a rainbow K4, colors fixed pointwise).
  Count fixed_rainbow_k4(const ColoredGraph& pattern) const;

  RedPairStats red_pair_stats(Vertex u, Vertex v, const ColorRoles& roles = {}) const;
  RedPairSums red_pair_sums(const ColorRoles& roles = {}) const;

  /// |S| = sum over ordered red pairs of d_plus^2.
  Count s_size(const ColorRoles& roles = {}) const;
  /// |S'| = G * B.
  Count s_prime_size(const ColorRoles& roles = {}) const;

 private:
  const ColoredGraph& g_;
  BitRows rows_;
};

ColorCounts color_counts(const ColoredGraph& g);
DegreeProfile degree_profile(const ColoredGraph& g, Vertex v);
Count count_rainbow_triangles(const ColoredGraph& g);
Count count_proper_k4(const ColoredGraph& g);
Count count_rainbow_k4(const ColoredGraph& g);
Count count_fixed_rainbow_k4(const ColoredGraph& g, const ColoredGraph& pattern);

/// Throws std::invalid_argument unless {u, v} has color roles.red.
RedPairStats red_pair_stats(const ColoredGraph& g, Vertex u, Vertex v,
                            const ColorRoles& roles = {});
Count count_s(const ColoredGraph& g, const ColorRoles& roles = {});
Count count_s_prime(const ColoredGraph& g, const ColorRoles& roles = {});

/// True iff `pattern` is a K4 with six distinct colors.
bool is_rainbow_k4(const ColoredGraph& pattern);

/// Number of pattern.n-subsets of g inducing a colored graph isomorphic to
/// `pattern` (colors fixed, non-edges must match). Intended for small patterns.
Count count_induced_copies(const ColoredGraph& g, const ColoredGraph& pattern);

/// count_induced_copies / C(g.n, pattern.n). Throws if pattern.n > g.n.
Rational subgraph_density(const ColoredGraph& g, const ColoredGraph& pattern);

/// Distinct rainbow K4 patterns present in g, one per colored isomorphism
/// class, each given as the induced subgraph of its first occurrence.
std::vector<ColoredGraph> rainbow_k4_patterns(const ColoredGraph& g);

}  // namespace rainbow

#endif  // RAINBOW_COUNTING_HPP
