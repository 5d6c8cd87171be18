#ifndef RAINBOW_BOUNDS_HPP
#define RAINBOW_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "rainbow/colored_graph.hpp"
#include "rainbow/counting.hpp"
#include "rainbow/exact.hpp"

namespace rainbow {

enum class BoundId {
  kTriangle,             // T^2 <= 2RGB
  kK4Min,                // 4K <= min{RG, GB, RB}
  kK4Geom,               // (4K)^3 <= (RGB)^2
  kFixedRainbowK4,       // H^3 <= prod C_i over the pattern's colors
  kSLeqSPrime,           // |S| <= |S'|
  kRainbowK4Conjecture,  // (#rainbow K4)^3 <= prod C_i, open question
};

std::string to_string(BoundId id);

/// Exact verdict for one inequality lhs <= rhs. Radicals are cleared by
/// raising both sides to a common power before comparing.
struct BoundReport {
  BoundId id = BoundId::kTriangle;
  BigInt lhs;
  BigInt rhs;
  bool holds = false;
  bool tight = false;
  BigInt slack;  // rhs - lhs
  /// Set for kRainbowK4Conjecture: a failure is a finding, not a bug.
  bool conjecture = false;
};

BoundReport make_bound_report(BoundId id, BigInt lhs, BigInt rhs);

/// The statements below are proven for three colors. On graphs with more
/// colors they are applied to the subgraph colored 1, 2, 3.
BoundReport check_triangle_bound(const ColoredGraph& g);

struct K4BoundReports {
  BoundReport min_form;   // kK4Min
  BoundReport geom_form;  // kK4Geom
};
K4BoundReports check_k4_bounds(const ColoredGraph& g);

/// Throws std::invalid_argument if `pattern` is not a rainbow K4.
BoundReport check_fixed_rainbow_bound(const ColoredGraph& g, const ColoredGraph& pattern);

/// Product over all colors 1..c. Needs c >= 6.
BoundReport check_rainbow_k4_conjecture(const ColoredGraph& g);

// ---------------------------------------------------------------------------
// The injection S -> S'.
//
// S  = ordered tuples (u, v, x, y) with uv red, ux and uy blue, vx and vy
//      green (x = y allowed).
// S' = pairs (g, b) of an unordered green edge g and an unordered blue edge b.
//
// The map sends (u, v, x, y) to the edge pair {u, x}, {v, y}; {u, x} is blue
// and {v, y} is green, so in S' order the image is (g, b) = ({v, y}, {u, x}).

struct Tuple4 {
  Vertex u = 0, v = 0, x = 0, y = 0;
  friend bool operator==(const Tuple4&, const Tuple4&) = default;
};

/// Unordered edge, normalized so that a < b.
struct VertexPair {
  Vertex a = 0, b = 0;
  static VertexPair of(Vertex p, Vertex q) { return p < q ? VertexPair{p, q} : VertexPair{q, p}; }
  bool contains(Vertex w) const { return w == a || w == b; }
  friend bool operator==(const VertexPair&, const VertexPair&) = default;
};

struct EdgePairImage {
  VertexPair green;
  VertexPair blue;
  friend bool operator==(const EdgePairImage&, const EdgePairImage&) = default;
};

EdgePairImage injection_image(const Tuple4& s);

/// Recovers the tuple from an image: when the two edges share an endpoint z,
/// u is the vertex with a red and a blue edge, v the one with a red and a
/// green edge, and x = y = z; when they are disjoint, u is the blue endpoint
/// without a green edge, x the other blue endpoint, v the red neighbor of u
/// and y the remaining endpoint. Returns nullopt when the colors around the
/// image do not single out a tuple.
std::optional<Tuple4> decode_image(const ColoredGraph& g, const EdgePairImage& image,
                                   const ColorRoles& roles = {});

struct InjectionViolation {
  enum class Kind {
    kImageNotGreenBlue,  // image is not a (green edge, blue edge) pair
    kCollision,          // two tuples share an image
    kDecodeFailed,       // decoder rejects the image
    kDecodeMismatch,     // decoder returns a different tuple
  };
  Kind kind;
  Tuple4 tuple;
  std::optional<Tuple4> other;  // colliding tuple or decoder output
  EdgePairImage image;
};

std::string to_string(InjectionViolation::Kind kind);

struct InjectionCheck {
  Count s_size = 0;
  Count s_prime_size = 0;
  std::vector<InjectionViolation> violations;

  bool ok() const { return violations.empty() && s_size <= s_prime_size; }
};

InjectionCheck verify_injection(const ColoredGraph& g, const ColorRoles& roles = {});

/// kSLeqSPrime report from an injection run.
BoundReport s_bound_report(const InjectionCheck& check);

}  // namespace rainbow

#endif  // RAINBOW_BOUNDS_HPP
