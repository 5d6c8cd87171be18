#include "rainbow/counting.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "rainbow/transforms.hpp"

namespace rainbow {

BitRows::BitRows(const ColoredGraph& g)
    : n_(g.vertex_count()),
      c_(g.color_count()),
      words_(std::max(1, (g.vertex_count() + 63) / 64)) {
  data_.assign(static_cast<std::size_t>(n_) * (c_ + 1) * words_, 0);
  // Row 0 of each vertex is its full neighborhood.
  for (const Edge& e : g.edges()) {
    const auto set = [&](Vertex v, Color x, Vertex w) {
      data_[index(v, x) + (w >> 6)] |= Word{1} << (w & 63);
    };
    set(e.u, e.color, e.v);
    set(e.v, e.color, e.u);
    set(e.u, kNoEdge, e.v);
    set(e.v, kNoEdge, e.u);
  }
}

namespace {

void require_colors(const ColoredGraph& g, int minimum, const char* what) {
  if (g.color_count() < minimum) {
    throw std::invalid_argument(std::string(what) + " needs at least " +
                                std::to_string(minimum) + " colors");
  }
}

void require_roles(const ColoredGraph& g, const ColorRoles& r) {
  const int c = g.color_count();
  const auto ok = [c](Color x) { return x >= 1 && x <= c; };
  if (!ok(r.red) || !ok(r.green) || !ok(r.blue) || r.red == r.green ||
      r.red == r.blue || r.green == r.blue) {
    throw std::invalid_argument("color roles must be three distinct colors");
  }
}

int popcount_and3(std::span<const BitRows::Word> a, std::span<const BitRows::Word> b,
                  std::span<const BitRows::Word> c) {
  int total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += std::popcount(a[i] & b[i] & c[i]);
  return total;
}

bool all_distinct(std::array<Color, 6> cs) {
  std::sort(cs.begin(), cs.end());
  return std::adjacent_find(cs.begin(), cs.end()) == cs.end();
}

// Colex order of the pairs of a k-vertex graph: (0,1), (0,2), (1,2), (0,3), ...
std::string pair_code(const ColoredGraph& g, std::span<const Vertex> vs) {
  std::string code;
  for (std::size_t k = 1; k < vs.size(); ++k) {
    for (std::size_t i = 0; i < k; ++i) {
      code.push_back(static_cast<char>(g.color(vs[i], vs[k])));
    }
  }
  return code;
}

}  // namespace

Count ColorCounts::total() const {
  Count t = 0;
  for (Count x : per_color) t = checked_add(t, x);
  return t;
}

Count DegreeProfile::degree() const {
  Count t = 0;
  for (Count x : per_color_degree) t = checked_add(t, x);
  return t;
}

GraphCounter::GraphCounter(const ColoredGraph& g) : g_(g), rows_(g) {}

ColorCounts GraphCounter::color_counts() const {
  ColorCounts out;
  out.per_color.assign(static_cast<std::size_t>(g_.color_count()) + 1, 0);
  for (const Edge& e : g_.edges()) ++out.per_color[e.color];
  return out;
}

DegreeProfile GraphCounter::degree_profile(Vertex v) const {
  if (v < 0 || v >= g_.vertex_count()) throw std::invalid_argument("vertex out of range");
  DegreeProfile out{v, std::vector<Count>(static_cast<std::size_t>(g_.color_count()) + 1, 0)};
  for (Color x = 1; x <= g_.color_count(); ++x) {
    out.per_color_degree[x] = static_cast<Count>(
        BitRows::popcount_and(rows_.row(v, x), rows_.row(v, x)));
  }
  return out;
}

Count GraphCounter::rainbow_triangles() const {
  require_colors(g_, 3, "rainbow triangle counting");
  const int c = g_.color_count();
  // Every rainbow triangle is seen once from each of its three edges.
  Count thrice = 0;
  for (const Edge& e : g_.edges()) {
    for (Color y = 1; y <= c; ++y) {
      if (y == e.color) continue;
      for (Color z = 1; z <= c; ++z) {
        if (z == e.color || z == y) continue;
        thrice = checked_add(thrice, static_cast<Count>(BitRows::popcount_and(
                                         rows_.row(e.u, y), rows_.row(e.v, z))));
      }
    }
  }
  return thrice / 3;
}

Count GraphCounter::rainbow_triangles(const ColorRoles& roles) const {
  require_roles(g_, roles);
  const std::array<Color, 3> colors{roles.red, roles.green, roles.blue};
  Count thrice = 0;
  for (const Edge& e : g_.edges()) {
    if (std::find(colors.begin(), colors.end(), e.color) == colors.end()) continue;
    for (Color y : colors) {
      for (Color z : colors) {
        if (y == e.color || z == e.color || y == z) continue;
        thrice = checked_add(thrice, static_cast<Count>(BitRows::popcount_and(
                                         rows_.row(e.u, y), rows_.row(e.v, z))));
      }
    }
  }
  return thrice / 3;
}

namespace {

// Ordered (w, x) completions of edge {u, v} of color a to a K4 where
// uw, vx have color b and ux, vw have color c, and wx has color a.
Count k4_completions(const BitRows& rows, Vertex u, Vertex v, Color a, Color b,
                     Color c) {
  const auto x_row_u = rows.row(u, c);
  const auto x_row_v = rows.row(v, b);
  Count total = 0;
  BitRows::for_each_and(rows.row(u, b), rows.row(v, c), [&](Vertex w) {
    total += static_cast<Count>(popcount_and3(rows.row(w, a), x_row_u, x_row_v));
  });
  return total;
}

}  // namespace

Count GraphCounter::proper_k4() const {
  require_colors(g_, 3, "properly colored K4 counting");
  const int c = g_.color_count();
  // Each K4 is seen from its 6 edges, twice per edge (w and x swap roles).
  Count twelve = 0;
  for (const Edge& e : g_.edges()) {
    for (Color y = 1; y <= c; ++y) {
      if (y == e.color) continue;
      for (Color z = 1; z <= c; ++z) {
        if (z == e.color || z == y) continue;
        twelve = checked_add(twelve, k4_completions(rows_, e.u, e.v, e.color, y, z));
      }
    }
  }
  return twelve / 12;
}

Count GraphCounter::proper_k4(const ColorRoles& roles) const {
  require_roles(g_, roles);
  const std::array<Color, 3> colors{roles.red, roles.green, roles.blue};
  Count twelve = 0;
  for (const Edge& e : g_.edges()) {
    if (std::find(colors.begin(), colors.end(), e.color) == colors.end()) continue;
    for (Color y : colors) {
      for (Color z : colors) {
        if (y == e.color || z == e.color || y == z) continue;
        twelve = checked_add(twelve, k4_completions(rows_, e.u, e.v, e.color, y, z));
      }
    }
  }
  return twelve / 12;
}

Count GraphCounter::rainbow_k4() const {
  require_colors(g_, 6, "rainbow K4 counting");
  Count total = 0;
  for (Vertex u = 0; u < g_.vertex_count(); ++u) {
    BitRows::for_each_and(rows_.row(u, kNoEdge), rows_.row(u, kNoEdge), [&](Vertex v) {
      if (v <= u) return;
      const Color cuv = g_.color(u, v);
      BitRows::for_each_and(rows_.row(u, kNoEdge), rows_.row(v, kNoEdge), [&](Vertex w) {
        if (w <= v) return;
        const Color cuw = g_.color(u, w), cvw = g_.color(v, w);
        if (cuw == cuv || cvw == cuv || cvw == cuw) return;
        const auto nu = rows_.row(u, kNoEdge);
        const auto nv = rows_.row(v, kNoEdge);
        const auto nw = rows_.row(w, kNoEdge);
        for (std::size_t i = 0; i < nu.size(); ++i) {
          BitRows::Word bits = nu[i] & nv[i] & nw[i];
          while (bits != 0) {
            const auto x = static_cast<Vertex>(i * 64 + std::countr_zero(bits));
            bits &= bits - 1;
            if (x <= w) continue;
            if (all_distinct({cuv, cuw, cvw, g_.color(u, x), g_.color(v, x),
                              g_.color(w, x)})) {
              ++total;
            }
          }
        }
      });
    });
  }
  return total;
}

Count GraphCounter::fixed_rainbow_k4(const ColoredGraph& pattern) const {
  if (!is_rainbow_k4(pattern)) {
    throw std::invalid_argument("pattern is not a rainbow K4");
  }
  for (const Edge& e : pattern.edges()) {
    if (e.color > g_.color_count()) {
      throw std::invalid_argument("pattern uses a color the graph does not have");
    }
  }
  const Color c01 = pattern.color(0, 1), c02 = pattern.color(0, 2),
              c03 = pattern.color(0, 3), c12 = pattern.color(1, 2),
              c13 = pattern.color(1, 3), c23 = pattern.color(2, 3);
  // Six distinct colors leave the pattern without automorphisms, so labeled
  // embeddings and copies coincide.
  Count total = 0;
  for (Vertex a = 0; a < g_.vertex_count(); ++a) {
    BitRows::for_each_and(rows_.row(a, c01), rows_.row(a, c01), [&](Vertex b) {
      BitRows::for_each_and(rows_.row(a, c02), rows_.row(b, c12), [&](Vertex c) {
        total = checked_add(total, static_cast<Count>(popcount_and3(
                                       rows_.row(a, c03), rows_.row(b, c13),
                                       rows_.row(c, c23))));
      });
    });
  }
  return total;
}

RedPairStats GraphCounter::red_pair_stats(Vertex u, Vertex v,
                                          const ColorRoles& roles) const {
  require_roles(g_, roles);
  const int n = g_.vertex_count();
  if (u < 0 || u >= n || v < 0 || v >= n || u == v || g_.color(u, v) != roles.red) {
    throw std::invalid_argument("(" + std::to_string(u) + "," + std::to_string(v) +
                                ") is not a red edge");
  }
  RedPairStats s{u, v, 0, 0, 0};
  const auto plus_u = rows_.row(u, roles.blue), plus_v = rows_.row(v, roles.green);
  s.d_plus = static_cast<Count>(BitRows::popcount_and(plus_u, plus_v));
  s.d_minus = static_cast<Count>(
      BitRows::popcount_and(rows_.row(u, roles.green), rows_.row(v, roles.blue)));
  BitRows::for_each_and(rows_.row(u, roles.green), rows_.row(v, roles.blue), [&](Vertex w) {
    s.d_k += static_cast<Count>(popcount_and3(rows_.row(w, roles.red), plus_u, plus_v));
  });
  return s;
}

RedPairSums GraphCounter::red_pair_sums(const ColorRoles& roles) const {
  require_roles(g_, roles);
  RedPairSums sums;
  for (const Edge& e : g_.edges()) {
    if (e.color != roles.red) continue;
    for (const auto& [u, v] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      const RedPairStats s = red_pair_stats(u, v, roles);
      sums.ordered_red_pairs = checked_add(sums.ordered_red_pairs, 1);
      sums.sum_d_plus = checked_add(sums.sum_d_plus, s.d_plus);
      sums.sum_d_minus = checked_add(sums.sum_d_minus, s.d_minus);
      sums.sum_d_plus_sq = checked_add(sums.sum_d_plus_sq, checked_mul(s.d_plus, s.d_plus));
      sums.sum_d_minus_sq =
          checked_add(sums.sum_d_minus_sq, checked_mul(s.d_minus, s.d_minus));
      sums.sum_d_minus_d_plus =
          checked_add(sums.sum_d_minus_d_plus, checked_mul(s.d_minus, s.d_plus));
      sums.sum_d_k = checked_add(sums.sum_d_k, s.d_k);
    }
  }
  return sums;
}

Count GraphCounter::s_size(const ColorRoles& roles) const {
  require_roles(g_, roles);
  Count total = 0;
  for (const Edge& e : g_.edges()) {
    if (e.color != roles.red) continue;
    for (const auto& [u, v] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      const auto d = static_cast<Count>(
          BitRows::popcount_and(rows_.row(u, roles.blue), rows_.row(v, roles.green)));
      total = checked_add(total, checked_mul(d, d));
    }
  }
  return total;
}

Count GraphCounter::s_prime_size(const ColorRoles& roles) const {
  require_roles(g_, roles);
  const ColorCounts cc = color_counts();
  return checked_mul(cc.of(roles.green), cc.of(roles.blue));
}

ColorCounts color_counts(const ColoredGraph& g) { return GraphCounter(g).color_counts(); }

DegreeProfile degree_profile(const ColoredGraph& g, Vertex v) {
  return GraphCounter(g).degree_profile(v);
}

Count count_rainbow_triangles(const ColoredGraph& g) {
  return GraphCounter(g).rainbow_triangles();
}

Count count_proper_k4(const ColoredGraph& g) { return GraphCounter(g).proper_k4(); }

Count count_rainbow_k4(const ColoredGraph& g) { return GraphCounter(g).rainbow_k4(); }

Count count_fixed_rainbow_k4(const ColoredGraph& g, const ColoredGraph& pattern) {
  return GraphCounter(g).fixed_rainbow_k4(pattern);
}

RedPairStats red_pair_stats(const ColoredGraph& g, Vertex u, Vertex v,
                            const ColorRoles& roles) {
  return GraphCounter(g).red_pair_stats(u, v, roles);
}

Count count_s(const ColoredGraph& g, const ColorRoles& roles) {
  return GraphCounter(g).s_size(roles);
}

Count count_s_prime(const ColoredGraph& g, const ColorRoles& roles) {
  return GraphCounter(g).s_prime_size(roles);
}

bool is_rainbow_k4(const ColoredGraph& pattern) {
  if (pattern.vertex_count() != 4 || pattern.edge_count() != 6) return false;
  std::array<Color, 6> cs{};
  std::size_t i = 0;
  for (const Edge& e : pattern.edges()) cs[i++] = e.color;
  return all_distinct(cs);
}

Count count_induced_copies(const ColoredGraph& g, const ColoredGraph& pattern) {
  const int p = pattern.vertex_count();
  if (p > g.vertex_count()) {
    throw std::invalid_argument("pattern has more vertices than the graph");
  }
  if (p > 8) throw std::invalid_argument("patterns are limited to 8 vertices");
  if (p == 0) return 1;

  // Every labeling of the pattern, and every prefix of those codes, so the
  // subset search can prune as soon as a partial subset cannot match.
  std::vector<Vertex> perm(p);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::set<std::string>> prefixes(p + 1);
  do {
    const std::string code = pair_code(pattern, perm);
    for (int k = 1; k <= p; ++k) prefixes[k].insert(code.substr(0, k * (k - 1) / 2));
  } while (std::next_permutation(perm.begin(), perm.end()));

  const int n = g.vertex_count();
  std::vector<Vertex> chosen;
  std::string code;
  Count total = 0;
  const auto extend = [&](const auto& self, Vertex start) -> void {
    const int k = static_cast<int>(chosen.size());
    if (k == p) {
      ++total;
      return;
    }
    for (Vertex v = start; v <= n - (p - k); ++v) {
      const std::size_t mark = code.size();
      for (Vertex w : chosen) code.push_back(static_cast<char>(g.color(w, v)));
      if (prefixes[k + 1].count(code) != 0) {
        chosen.push_back(v);
        self(self, v + 1);
        chosen.pop_back();
      }
      code.resize(mark);
    }
  };
  extend(extend, 0);
  return total;
}

Rational subgraph_density(const ColoredGraph& g, const ColoredGraph& pattern) {
  const Count copies = count_induced_copies(g, pattern);
  return Rational(BigInt(copies), binomial(g.vertex_count(), pattern.vertex_count()));
}

std::vector<ColoredGraph> rainbow_k4_patterns(const ColoredGraph& g) {
  std::vector<ColoredGraph> out;
  std::set<std::string> seen;
  const int n = g.vertex_count();
  std::array<Vertex, 4> q{};
  for (q[0] = 0; q[0] < n; ++q[0]) {
    for (q[1] = q[0] + 1; q[1] < n; ++q[1]) {
      for (q[2] = q[1] + 1; q[2] < n; ++q[2]) {
        for (q[3] = q[2] + 1; q[3] < n; ++q[3]) {
          ColoredGraph sub = induced_subgraph(g, q);
          if (!is_rainbow_k4(sub)) continue;
          std::array<Vertex, 4> perm{0, 1, 2, 3};
          std::string key;
          do {
            key = key.empty() ? pair_code(sub, perm) : std::min(key, pair_code(sub, perm));
          } while (std::next_permutation(perm.begin(), perm.end()));
          if (seen.insert(key).second) out.push_back(std::move(sub));
        }
      }
    }
  }
  return out;
}

}  // namespace rainbow
