#include "rainbow/extremal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "rainbow/graph_io.hpp"

namespace rainbow {

ColoredGraph make_proper_k4() {
  const std::array<Edge, 6> edges{{{0, 1, kRed},
                                   {2, 3, kRed},
                                   {0, 2, kGreen},
                                   {1, 3, kGreen},
                                   {0, 3, kBlue},
                                   {1, 2, kBlue}}};
  return ColoredGraph::from_edges(4, 3, edges);
}

ColoredGraph make_k6_sum_coloring() {
  ColoredGraph g(6, 6);
  for (Vertex i = 0; i < 6; ++i) {
    for (Vertex j = i + 1; j < 6; ++j) g.set_color(i, j, 1 + (i + j) % 6);
  }
  return g;
}

ColoredGraph make_rainbow_k4() {
  const std::array<Edge, 6> edges{
      {{0, 1, 1}, {0, 2, 2}, {0, 3, 3}, {1, 2, 4}, {1, 3, 5}, {2, 3, 6}}};
  return ColoredGraph::from_edges(4, 6, edges);
}

ColoredGraph load_complete_coloring(const std::filesystem::path& path,
                                    Count expected_rainbow_k4) {
  ColoredGraph g = read_graph_file(path);
  if (g.color_count() < 6) throw std::runtime_error(path.string() + ": fewer than 6 colors");
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (g.edge_count() != n * (n - 1) / 2) {
    throw std::runtime_error(path.string() + ": not a complete coloring");
  }
  const Count found = count_rainbow_k4(g);
  if (found != expected_rainbow_k4) {
    throw std::runtime_error(path.string() + ": expected " +
                             std::to_string(expected_rainbow_k4) + " rainbow K4s, found " +
                             std::to_string(found));
  }
  return g;
}

std::string to_string(Verdict v) {
  return v == Verdict::kCertified ? "CERTIFIED" : "VIOLATION";
}

std::string to_string(ViolatedCondition c) {
  switch (c) {
    case ViolatedCondition::kA: return "A";
    case ViolatedCondition::kB: return "B";
    case ViolatedCondition::kConnectivityDerived: return "CONNECTIVITY-DERIVED";
  }
  return "UNKNOWN";
}

namespace {

void require_exactly_three_colors(const ColoredGraph& g) {
  if (g.color_count() != 3) {
    throw std::invalid_argument("structure recognition needs exactly 3 colors");
  }
}

constexpr std::array<BlowupCertificate::Pairing, 6> kPairing{{{0, 3, kRed},
                                                              {1, 3, kGreen},
                                                              {2, 3, kBlue},
                                                              {0, 1, kBlue},
                                                              {0, 2, kGreen},
                                                              {1, 2, kRed}}};

// First pair whose color disagrees with the partition, scanning u < v.
std::optional<Edge> partition_mismatch(const ColoredGraph& g,
                                       const std::array<std::vector<Vertex>, 4>& parts) {
  std::vector<int> part_of(g.vertex_count(), -1);
  for (int p = 0; p < 4; ++p) {
    for (Vertex v : parts[p]) part_of[v] = p;
  }
  std::array<std::array<Color, 4>, 4> expected{};
  for (const auto& pr : kPairing) {
    expected[pr.part_a][pr.part_b] = pr.color;
    expected[pr.part_b][pr.part_a] = pr.color;
  }
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      const Color want = (part_of[u] < 0 || part_of[v] < 0)
                             ? kNoEdge
                             : expected[part_of[u]][part_of[v]];
      if (part_of[u] < 0 || part_of[v] < 0 || g.color(u, v) != want) {
        return Edge{u, v, g.color(u, v)};
      }
    }
  }
  return std::nullopt;
}

BlowupCertificate make_certificate(std::array<std::vector<Vertex>, 4> parts) {
  BlowupCertificate cert;
  for (int p = 0; p < 4; ++p) {
    std::sort(parts[p].begin(), parts[p].end());
    cert.sizes[p] = static_cast<int>(parts[p].size());
  }
  cert.parts = std::move(parts);
  cert.pairing = kPairing;
  cert.balanced = std::all_of(cert.sizes.begin(), cert.sizes.end(),
                              [&](int s) { return s == cert.sizes[0] && s > 0; });
  cert.d = cert.balanced ? cert.sizes[0] : 0;
  return cert;
}

}  // namespace

std::optional<EdgePairWitness> check_condition_a(const ColoredGraph& g) {
  require_exactly_three_colors(g);
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& e1 = edges[i];
      const Edge& e2 = edges[j];
      if (e1.color == e2.color) continue;
      const Color third = 6 - e1.color - e2.color;
      bool joined = false;
      for (Vertex p : {e1.u, e1.v}) {
        for (Vertex q : {e2.u, e2.v}) {
          if (p != q && g.color(p, q) == third) joined = true;
        }
      }
      if (!joined) return EdgePairWitness{e1, e2};
    }
  }
  return std::nullopt;
}

ConditionB check_condition_b(const ColoredGraph& g) {
  require_exactly_three_colors(g);
  ConditionB out;
  if (g.vertex_count() == 0) return out;
  const GraphCounter counter(g);
  const auto d = counter.degree_profile(0).per_color_degree[kRed];
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    DegreeProfile profile = counter.degree_profile(v);
    const auto& deg = profile.per_color_degree;
    if (d == 0 || deg[kRed] != d || deg[kGreen] != d || deg[kBlue] != d) {
      out.witness = std::move(profile);
      return out;
    }
  }
  out.d = static_cast<int>(d);
  return out;
}

RecognitionResult recognize_balanced_blowup(const ColoredGraph& g) {
  RecognitionResult result;
  if (auto witness = check_condition_a(g)) {
    RecognitionViolation v;
    v.condition = ViolatedCondition::kA;
    v.edge_pair = *witness;
    v.detail = "edges of distinct colors not joined by an edge of the third color";
    result.violation = std::move(v);
    return result;
  }
  const ConditionB b = check_condition_b(g);
  if (!b.ok()) {
    RecognitionViolation v;
    v.condition = ViolatedCondition::kB;
    v.vertex = b.witness;
    v.detail = b.witness ? "unequal per-color degrees" : "no vertices";
    result.violation = std::move(v);
    return result;
  }

  // Neighborhoods of the lowest-id vertex; non-neighbors (itself included)
  // form V_0.
  const Vertex ref = 0;
  std::array<std::vector<Vertex>, 4> parts;
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    const Color x = g.color(ref, w);
    parts[x == kNoEdge ? 3 : x - 1].push_back(w);
  }
  const bool sizes_ok = std::all_of(parts.begin(), parts.end(), [&](const auto& p) {
    return static_cast<int>(p.size()) == *b.d;
  });
  if (const auto bad = partition_mismatch(g, parts); bad || !sizes_ok) {
    RecognitionViolation v;
    v.condition = ViolatedCondition::kConnectivityDerived;
    v.pair = bad;
    v.detail = bad ? "pair contradicts the recovered partition"
                   : "recovered parts are not all of size d";
    result.violation = std::move(v);
    return result;
  }
  result.verdict = Verdict::kCertified;
  result.certificate = make_certificate(std::move(parts));
  return result;
}

std::optional<BlowupCertificate> describe_k4_blowup(const ColoredGraph& g) {
  if (g.color_count() < 3 || g.vertex_count() < 4) return std::nullopt;
  const int n = g.vertex_count();
  // Twins share a part; the class of vertex 0 is V_0.
  std::map<std::vector<Color>, int> class_of_row;
  std::vector<int> cls(n);
  std::vector<Vertex> representative;
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Color> row(n);
    for (Vertex w = 0; w < n; ++w) row[w] = g.color(v, w);
    const auto [it, inserted] =
        class_of_row.emplace(std::move(row), static_cast<int>(representative.size()));
    if (inserted) representative.push_back(v);
    cls[v] = it->second;
  }
  if (representative.size() != 4) return std::nullopt;
  std::array<std::vector<Vertex>, 4> parts;
  for (Vertex v = 0; v < n; ++v) {
    const Color x = g.color(representative[0], representative[cls[v]]);
    if (cls[v] != 0 && (x < kRed || x > kBlue)) return std::nullopt;
    parts[cls[v] == 0 ? 3 : x - 1].push_back(v);
  }
  if (std::any_of(parts.begin(), parts.end(), [](const auto& p) { return p.empty(); })) {
    return std::nullopt;
  }
  if (partition_mismatch(g, parts)) return std::nullopt;
  return make_certificate(std::move(parts));
}

ColoredGraph reconstruct(const BlowupCertificate& cert, int n) {
  ColoredGraph g(n, 3);
  for (const auto& pr : cert.pairing) {
    for (Vertex a : cert.parts[pr.part_a]) {
      for (Vertex b : cert.parts[pr.part_b]) g.set_color(a, b, pr.color);
    }
  }
  return g;
}

DensityLimit density_limits(const ColoredGraph& g) {
  const int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("density limits need n >= 1");
  const GraphCounter counter(g);
  const ColorCounts cc = counter.color_counts();
  const BigInt nn = n;
  DensityLimit out;
  out.edge_density.resize(cc.per_color.size());
  for (Color x = 1; x <= g.color_count(); ++x) {
    out.edge_density[x] = Rational(2 * BigInt(cc.of(x)), nn * nn);
  }
  out.triangle = Rational(6 * BigInt(counter.rainbow_triangles()), nn * nn * nn);
  out.proper_k4 = Rational(24 * BigInt(counter.proper_k4()), nn * nn * nn * nn);
  return out;
}

namespace {

void require_pattern_size(int k, int p) {
  if (p != 3 && p != 4) throw std::invalid_argument("pattern size must be 3 or 4");
  if (k < 2) throw std::invalid_argument("base needs at least 2 vertices");
}

BigInt factorial(int p) {
  BigInt f = 1;
  for (int i = 2; i <= p; ++i) f *= i;
  return f;
}

}  // namespace

Rational iterated_density(int k, int pattern_size, Count pattern_count) {
  require_pattern_size(k, pattern_size);
  const BigInt kp = ipow(BigInt(k), static_cast<unsigned>(pattern_size));
  return Rational(factorial(pattern_size) * pattern_count, kp - k);
}

Rational iterated_density(const ColoredGraph& base, int pattern_size, Count pattern_count) {
  const auto k = static_cast<std::size_t>(base.vertex_count());
  if (base.edge_count() != k * (k - 1) / 2) {
    throw std::invalid_argument("iterated density needs a complete base coloring");
  }
  return iterated_density(base.vertex_count(), pattern_size, pattern_count);
}

Rational iterated_density_truncated(int k, int pattern_size, Count pattern_count, int depth) {
  require_pattern_size(k, pattern_size);
  const BigInt kp = ipow(BigInt(k), static_cast<unsigned>(pattern_size));
  const Rational a(factorial(pattern_size) * pattern_count, kp);
  const Rational r(BigInt(k), kp);  // k^(1-p)
  Rational d = 0;
  for (int level = 0; level < depth; ++level) d = a + r * d;
  return d;
}

double iterated_density_unrolled(int k, int pattern_size, Count pattern_count, int depth) {
  require_pattern_size(k, pattern_size);
  double kp = 1.0;
  for (int i = 0; i < pattern_size; ++i) kp *= k;
  double fact = 1.0;
  for (int i = 2; i <= pattern_size; ++i) fact *= i;
  const double a = fact * static_cast<double>(pattern_count) / kp;
  const double r = static_cast<double>(k) / kp;
  double geometric = 0.0, power = 1.0;
  for (int level = 0; level < depth; ++level) {
    geometric += power;
    power *= r;
  }
  return a * geometric / (1.0 - power);
}

}  // namespace rainbow
