#ifndef RAINBOW_EXTREMAL_HPP
#define RAINBOW_EXTREMAL_HPP

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/colored_graph.hpp"
#include "rainbow/counting.hpp"
#include "rainbow/exact.hpp"

namespace rainbow {

// Constructions -------------------------------------------------------------

/// K4 on 0..3 with matchings {01, 23} red, {02, 13} green, {03, 12} blue.
ColoredGraph make_proper_k4();

/// K6 on 0..5 where {i, j} has color 1 + ((i + j) mod 6); six colors.
ColoredGraph make_k6_sum_coloring();

/// K4 with color 1..6 on pairs 01, 02, 03, 12, 13, 23.
ColoredGraph make_rainbow_k4();

/// Reads a coloring from a graph file and checks that it is a complete
/// coloring with `expected_rainbow_k4` rainbow K4s. Throws std::runtime_error
/// otherwise.
ColoredGraph load_complete_coloring(const std::filesystem::path& path,
                                    Count expected_rainbow_k4);

// Structure recognition (three colors) --------------------------------------

/// Two edges of distinct colors with no edge of the third color joining them.
struct EdgePairWitness {
  Edge first;
  Edge second;
};

/// nullopt when every pair of differently colored edges is joined by an edge
/// of the third color. Pairs are scanned in (first, second) order over the
/// sorted edge list. Needs c = 3.
std::optional<EdgePairWitness> check_condition_a(const ColoredGraph& g);

struct ConditionB {
  /// The common per-color degree, when every vertex has d >= 1 edges of
  /// each color.
  std::optional<int> d;
  /// First vertex that breaks the pattern. Absent only for the empty graph.
  std::optional<DegreeProfile> witness;

  bool ok() const { return d.has_value(); }
};

/// Needs c = 3. Callers strip isolated vertices first.
ConditionB check_condition_b(const ColoredGraph& g);

/// A blowup of the proper K4: parts[0..2] are V_R, V_G, V_B (the red, green,
/// blue neighborhoods of a reference vertex) and parts[3] is V_0, which holds
/// the reference vertex. Parts i and 3 are joined in color i + 1; V_R-V_G is
/// blue, V_R-V_B green, V_G-V_B red.
struct BlowupCertificate {
  struct Pairing {
    int part_a;
    int part_b;
    Color color;
  };
  std::array<std::vector<Vertex>, 4> parts;
  std::array<Pairing, 6> pairing;
  std::array<int, 4> sizes{};
  int d = 0;  // common part size when balanced, else 0
  bool balanced = false;
};

enum class Verdict { kCertified, kViolation };
enum class ViolatedCondition { kA, kB, kConnectivityDerived };

std::string to_string(Verdict v);
std::string to_string(ViolatedCondition c);

struct RecognitionViolation {
  ViolatedCondition condition = ViolatedCondition::kA;
  std::optional<EdgePairWitness> edge_pair;  // condition A
  std::optional<DegreeProfile> vertex;       // condition B
  /// Pair whose color contradicts the recovered partition.
  std::optional<Edge> pair;
  std::string detail;
};

struct RecognitionResult {
  Verdict verdict = Verdict::kViolation;
  std::optional<BlowupCertificate> certificate;
  std::optional<RecognitionViolation> violation;

  bool certified() const { return verdict == Verdict::kCertified; }
};

/// Decides whether g (no isolated vertices, c = 3) is a balanced blowup of a
/// properly colored K4: checks condition A, then condition B, then recovers
/// the partition from the lowest-id vertex and verifies every pair.
RecognitionResult recognize_balanced_blowup(const ColoredGraph& g);

/// Structural sub-check without the balance requirement: groups vertices by
/// colored neighborhood and returns the partition when g is a blowup of a
/// proper K4 with four nonempty parts.
std::optional<BlowupCertificate> describe_k4_blowup(const ColoredGraph& g);

/// Rebuilds the graph a certificate describes on `n` vertices.
ColoredGraph reconstruct(const BlowupCertificate& cert, int n);

// Densities -----------------------------------------------------------------

/// Limits along uniform blowups: 2C_i/n^2, 6T/n^3, 24K/n^4.
struct DensityLimit {
  std::vector<Rational> edge_density;  // index 0 unused
  Rational triangle;
  Rational proper_k4;
};

/// Needs n >= 1 and c >= 3.
DensityLimit density_limits(const ColoredGraph& g);

/// Limiting density p! cnt / (k^p - k) of a rainbow pattern on p vertices in
/// the iterated balanced blowup of a k-vertex complete coloring with cnt
/// copies. Throws if `base` is not complete or p is not 3 or 4.
Rational iterated_density(const ColoredGraph& base, int pattern_size, Count pattern_count);

/// Same value from k, p, cnt alone.
Rational iterated_density(int k, int pattern_size, Count pattern_count);

/// Density after `depth` levels of d <- p! cnt / k^p + k^(1-p) d starting
/// from d = 0: the exact per-tuple density of a depth-level construction
/// whose innermost parts are single vertices.
Rational iterated_density_truncated(int k, int pattern_size, Count pattern_count, int depth);

/// Unrolls the recursion `depth` levels, d = a (1 + r + ... + r^(depth-1)) +
/// r^depth d, and solves for d in double precision.
double iterated_density_unrolled(int k, int pattern_size, Count pattern_count, int depth);

}  // namespace rainbow

#endif  // RAINBOW_EXTREMAL_HPP
