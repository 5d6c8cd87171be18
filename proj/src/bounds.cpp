#include "rainbow/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace rainbow {

std::string to_string(BoundId id) {
  switch (id) {
    case BoundId::kTriangle: return "TRIANGLE";
    case BoundId::kK4Min: return "K4_MIN";
    case BoundId::kK4Geom: return "K4_GEOM";
    case BoundId::kFixedRainbowK4: return "FIXED_RAINBOW_K4";
    case BoundId::kSLeqSPrime: return "S_LEQ_SPRIME";
    case BoundId::kRainbowK4Conjecture: return "RAINBOW_K4_CONJ";
  }
  return "UNKNOWN";
}

std::string to_string(InjectionViolation::Kind kind) {
  switch (kind) {
    case InjectionViolation::Kind::kImageNotGreenBlue: return "image_not_green_blue";
    case InjectionViolation::Kind::kCollision: return "collision";
    case InjectionViolation::Kind::kDecodeFailed: return "decode_failed";
    case InjectionViolation::Kind::kDecodeMismatch: return "decode_mismatch";
  }
  return "unknown";
}

BoundReport make_bound_report(BoundId id, BigInt lhs, BigInt rhs) {
  BoundReport r;
  r.id = id;
  r.holds = lhs <= rhs;
  r.tight = lhs == rhs;
  r.slack = rhs - lhs;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.conjecture = id == BoundId::kRainbowK4Conjecture;
  return r;
}

namespace {

void require_three_colors(const ColoredGraph& g) {
  if (g.color_count() < 3) {
    throw std::invalid_argument("bound needs at least 3 colors");
  }
}

}  // namespace

BoundReport check_triangle_bound(const ColoredGraph& g) {
  require_three_colors(g);
  const GraphCounter counter(g);
  const ColorCounts cc = counter.color_counts();
  const BigInt t = counter.rainbow_triangles(ColorRoles{});
  return make_bound_report(BoundId::kTriangle, t * t,
                           2 * BigInt(cc.red()) * cc.green() * cc.blue());
}

K4BoundReports check_k4_bounds(const ColoredGraph& g) {
  require_three_colors(g);
  const GraphCounter counter(g);
  const ColorCounts cc = counter.color_counts();
  const BigInt r = cc.red(), gr = cc.green(), b = cc.blue();
  const BigInt four_k = 4 * BigInt(counter.proper_k4(ColorRoles{}));
  const BigInt smallest = std::min({r * gr, gr * b, r * b});
  const BigInt rgb = r * gr * b;
  return {make_bound_report(BoundId::kK4Min, four_k, smallest),
          make_bound_report(BoundId::kK4Geom, four_k * four_k * four_k, rgb * rgb)};
}

BoundReport check_fixed_rainbow_bound(const ColoredGraph& g, const ColoredGraph& pattern) {
  const GraphCounter counter(g);
  const BigInt h = counter.fixed_rainbow_k4(pattern);
  const ColorCounts cc = counter.color_counts();
  BigInt product = 1;
  for (const Edge& e : pattern.edges()) product *= cc.of(e.color);
  return make_bound_report(BoundId::kFixedRainbowK4, h * h * h, product);
}

BoundReport check_rainbow_k4_conjecture(const ColoredGraph& g) {
  const GraphCounter counter(g);
  const BigInt h = counter.rainbow_k4();
  const ColorCounts cc = counter.color_counts();
  BigInt product = 1;
  for (Color x = 1; x <= g.color_count(); ++x) product *= cc.of(x);
  return make_bound_report(BoundId::kRainbowK4Conjecture, h * h * h, product);
}

EdgePairImage injection_image(const Tuple4& s) {
  return {VertexPair::of(s.v, s.y), VertexPair::of(s.u, s.x)};
}

namespace {

Vertex other_end(const VertexPair& e, Vertex w) { return e.a == w ? e.b : e.a; }

bool has_color_edge(const ColoredGraph& g, Vertex w, std::span<const Vertex> among,
                    Color x) {
  return std::any_of(among.begin(), among.end(),
                     [&](Vertex z) { return z != w && g.color(w, z) == x; });
}

std::optional<Vertex> unique_vertex(std::span<const Vertex> among, auto&& pred) {
  std::optional<Vertex> found;
  for (Vertex w : among) {
    if (!pred(w)) continue;
    if (found) return std::nullopt;
    found = w;
  }
  return found;
}

}  // namespace

std::optional<Tuple4> decode_image(const ColoredGraph& g, const EdgePairImage& image,
                                   const ColorRoles& roles) {
  const VertexPair& gr = image.green;
  const VertexPair& bl = image.blue;
  if (gr == bl) return std::nullopt;

  // Shared endpoint: {u, v, z} with uv red, uz blue, vz green.
  for (Vertex z : {bl.a, bl.b}) {
    if (!gr.contains(z)) continue;
    const std::array<Vertex, 3> w{z, other_end(bl, z), other_end(gr, z)};
    const auto u = unique_vertex(w, [&](Vertex p) {
      return has_color_edge(g, p, w, roles.red) && has_color_edge(g, p, w, roles.blue);
    });
    const auto v = unique_vertex(w, [&](Vertex p) {
      return has_color_edge(g, p, w, roles.red) && has_color_edge(g, p, w, roles.green);
    });
    if (!u || !v) return std::nullopt;
    return Tuple4{*u, *v, z, z};
  }

  // Disjoint edges: u is the endpoint of the blue edge with no green edge.
  const std::array<Vertex, 4> w{gr.a, gr.b, bl.a, bl.b};
  const std::array<Vertex, 2> blue_ends{bl.a, bl.b};
  const auto u = unique_vertex(blue_ends, [&](Vertex p) {
    return !has_color_edge(g, p, w, roles.green);
  });
  if (!u) return std::nullopt;
  const Vertex x = other_end(bl, *u);
  const auto v = unique_vertex(w, [&](Vertex p) { return p != *u && g.color(*u, p) == roles.red; });
  const auto y = unique_vertex(w, [&](Vertex p) {
    return p != *u && p != x && g.color(*u, p) == roles.blue;
  });
  if (!v || !y) return std::nullopt;
  return Tuple4{*u, *v, x, *y};
}

InjectionCheck verify_injection(const ColoredGraph& g, const ColorRoles& roles) {
  const GraphCounter counter(g);
  InjectionCheck check;
  check.s_prime_size = counter.s_prime_size(roles);

  const BitRows rows(g);
  // Images keyed by packed endpoints; vertex ids fit in 16 bits.
  const auto key = [](const EdgePairImage& im) {
    return (static_cast<std::uint64_t>(im.green.a) << 48) |
           (static_cast<std::uint64_t>(im.green.b) << 32) |
           (static_cast<std::uint64_t>(im.blue.a) << 16) |
           static_cast<std::uint64_t>(im.blue.b);
  };
  std::unordered_map<std::uint64_t, Tuple4> seen;

  const auto visit = [&](const Tuple4& s) {
    check.s_size = checked_add(check.s_size, 1);
    const EdgePairImage image = injection_image(s);
    if (g.color(image.green.a, image.green.b) != roles.green ||
        g.color(image.blue.a, image.blue.b) != roles.blue) {
      check.violations.push_back({InjectionViolation::Kind::kImageNotGreenBlue, s, {}, image});
      return;
    }
    if (const auto [it, inserted] = seen.emplace(key(image), s); !inserted) {
      check.violations.push_back({InjectionViolation::Kind::kCollision, s, it->second, image});
    }
    const auto decoded = decode_image(g, image, roles);
    if (!decoded) {
      check.violations.push_back({InjectionViolation::Kind::kDecodeFailed, s, {}, image});
    } else if (!(*decoded == s)) {
      check.violations.push_back({InjectionViolation::Kind::kDecodeMismatch, s, decoded, image});
    }
  };

  for (const Edge& e : g.edges()) {
    if (e.color != roles.red) continue;
    for (const auto& [u, v] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      std::vector<Vertex> apex;
      BitRows::for_each_and(rows.row(u, roles.blue), rows.row(v, roles.green),
                            [&](Vertex w) { apex.push_back(w); });
      for (Vertex x : apex) {
        for (Vertex y : apex) visit({u, v, x, y});
      }
    }
  }
  return check;
}

BoundReport s_bound_report(const InjectionCheck& check) {
  return make_bound_report(BoundId::kSLeqSPrime, BigInt(check.s_size),
                           BigInt(check.s_prime_size));
}

}  // namespace rainbow
