#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracle.hpp"
#include "rainbow/canonical.hpp"
#include "rainbow/enumerate.hpp"
#include "rainbow/extremal.hpp"
#include "rainbow/graph_io.hpp"
#include "rainbow/transforms.hpp"

using namespace rainbow;

namespace {

EnumSpec spec_of(int n, int c, bool colors = false, bool complete = false) {
  EnumSpec s;
  s.n = n;
  s.c = c;
  s.modulo_color_symmetry = colors;
  s.filter = complete ? EnumFilter::kComplete : EnumFilter::kNone;
  return s;
}

std::vector<std::string> stream_codes(const EnumSpec& s, unsigned jobs) {
  std::vector<std::string> out;
  enumerate(s, [&](const SmallGraph& g) { out.push_back(g.code()); }, jobs);
  return out;
}

ColoredGraph random_relabel(const ColoredGraph& g, bool colors, std::mt19937_64& rng) {
  ColoredGraph h = permute_vertices(g, oracle::random_permutation(g.vertex_count(), rng));
  if (colors) {
    std::vector<Color> sigma(static_cast<std::size_t>(g.color_count()));
    std::iota(sigma.begin(), sigma.end(), 1);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    h = permute_colors(h, sigma);
  }
  return h;
}

}  // namespace

TEST(Enumerate, SmallExamples) {
  EXPECT_EQ(count_classes(spec_of(2, 3)), 4u);
  EXPECT_EQ(count_classes(spec_of(3, 3)), 20u);
  EXPECT_EQ(count_classes(spec_of(4, 3)), 276u);
  EXPECT_EQ(count_classes(spec_of(0, 3)), 1u);
  EXPECT_EQ(count_classes(spec_of(1, 3)), 1u);
}

TEST(Enumerate, MatchesBruteForceClassCounts) {
  for (int n = 0; n <= 4; ++n) {
    for (int c = 1; c <= 3; ++c) {
      for (bool colors : {false, true}) {
        for (bool complete : {false, true}) {
          ASSERT_EQ(count_classes(spec_of(n, c, colors, complete)),
                    oracle::class_count(n, c, colors, complete))
              << n << " " << c << " " << colors << " " << complete;
        }
      }
    }
  }
  for (bool colors : {false, true}) {
    ASSERT_EQ(count_classes(spec_of(3, 5, colors)), oracle::class_count(3, 5, colors, false));
  }
}

TEST(Enumerate, MatchesBurnsideCounts) {
  // Orbit counts from the cycle index of the pair action (independent script).
  const std::vector<Count> vertex_only{1, 1, 4, 20, 276, 10688};
  const std::vector<Count> with_colors{1, 1, 2, 7, 64, 1908};
  for (int n = 0; n <= 5; ++n) {
    EXPECT_EQ(count_classes(spec_of(n, 3)), vertex_only[n]);
    EXPECT_EQ(count_classes(spec_of(n, 3, true)), with_colors[n]);
  }
  const std::vector<Count> complete_six{1, 1, 1, 3, 25, 1205};
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(count_classes(spec_of(n, 6, true, true)), complete_six[n]);
  EXPECT_EQ(count_classes(spec_of(4, 6, true)), 81u);
  EXPECT_EQ(count_classes(spec_of(4, 6)), 5831u);
}

TEST(Enumerate, StreamIsCanonicalAndDistinct) {
  for (bool colors : {false, true}) {
    const EnumSpec s = spec_of(5, 3, colors);
    std::set<std::string> seen;
    enumerate(s, [&](const SmallGraph& g) {
      ASSERT_TRUE(is_canonical(g, colors));
      ASSERT_EQ(canonical_form(g, colors).code(), g.code());
      ASSERT_TRUE(seen.insert(g.code()).second);
    });
  }
}

TEST(Enumerate, DeterministicAndParallelSafe) {
  const EnumSpec s = spec_of(5, 3);
  const auto a = stream_codes(s, 1);
  EXPECT_EQ(stream_codes(s, 1), a);
  EXPECT_EQ(stream_codes(s, 3), a);
  EXPECT_EQ(count_classes(s, 4), a.size());
  const EnumSpec t = spec_of(5, 4, true);
  EXPECT_EQ(stream_codes(t, 2), stream_codes(t, 1));
}

TEST(Enumerate, BudgetAndValidation) {
  EXPECT_THROW(count_classes(spec_of(7, 3)), BudgetExceeded);
  EnumSpec big = spec_of(7, 3);
  big.budget = 1e9;
  EXPECT_NO_THROW(estimated_classes(big));
  EXPECT_THROW(count_classes(spec_of(-1, 3)), std::invalid_argument);
  EXPECT_THROW(count_classes(spec_of(3, 0)), std::invalid_argument);
  EXPECT_THROW(count_classes(spec_of(11, 1)), std::invalid_argument);
}

TEST(Canonical, MatchesBruteForceMinimum) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng() % 7);
    const int c = 1 + static_cast<int>(rng() % 3);
    const bool colors = trial % 2 == 1;
    const ColoredGraph g = oracle::random_graph(n, c, 0.3, rng);
    ASSERT_EQ(SmallGraph::from(canonical_form(g, colors)).code(), oracle::min_code(g, colors))
        << serialize_graph(g);
  }
}

TEST(Canonical, InvariantUnderRelabelingProperty) {
  struct Case {
    int n, c;
  };
  for (const Case cs : {Case{4, 3}, Case{5, 3}, Case{6, 3}, Case{6, 6}}) {
    for (bool colors : {false, true}) {
      std::mt19937_64 rng(1000 + cs.n * 10 + cs.c + colors);
      for (int trial = 0; trial < 10000; ++trial) {
        const ColoredGraph g = oracle::random_graph(cs.n, cs.c, 0.25, rng);
        const ColoredGraph h = random_relabel(g, colors, rng);
        ASSERT_EQ(canonical_form(h, colors), canonical_form(g, colors)) << serialize_graph(g);
      }
    }
  }
}

TEST(Canonical, LargerGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const ColoredGraph g = oracle::random_graph(10, 3, 0.3, rng);
    const ColoredGraph canon = canonical_form(g, true);
    ASSERT_TRUE(is_canonical(canon, true));
    ASSERT_EQ(canonical_form(random_relabel(g, true, rng), true), canon);
  }
  EXPECT_THROW(canonical_form(ColoredGraph(11, 3), false), std::invalid_argument);
}

TEST(Verify, ExamplesThreeAndFourVertices) {
  const VerificationReport r3 = exhaustive_verify(spec_of(3, 3));
  EXPECT_EQ(r3.graphs_seen, 20u);
  EXPECT_TRUE(r3.clean());
  EXPECT_TRUE(r3.tight_cases.empty());

  const VerificationReport r4 = exhaustive_verify(spec_of(4, 3));
  EXPECT_EQ(r4.graphs_seen, 276u);
  EXPECT_TRUE(r4.clean());
  ASSERT_EQ(r4.tight_cases.size(), 1u);
  const TightCase& t = r4.tight_cases[0];
  EXPECT_TRUE(t.triangle_tight);
  EXPECT_TRUE(t.k4_tight);
  EXPECT_TRUE(t.certified);
  EXPECT_EQ(t.d, 1);
  EXPECT_EQ(canonical_form(parse_graph(t.graph), false), canonical_form(make_proper_k4(), false));
  for (const auto& name : verification_checks()) EXPECT_TRUE(r4.violations.count(name));
}

TEST(Verify, EmptyVertexSet) {
  const VerificationReport r = exhaustive_verify(spec_of(0, 3));
  EXPECT_EQ(r.graphs_seen, 1u);
  EXPECT_TRUE(r.clean());
  EXPECT_TRUE(r.tight_cases.empty());
}

TEST(Verify, ParallelMatchesSerial) {
  const VerificationReport a = exhaustive_verify(spec_of(5, 3), 1);
  const VerificationReport b = exhaustive_verify(spec_of(5, 3), 3);
  EXPECT_EQ(a.graphs_seen, b.graphs_seen);
  EXPECT_EQ(a.violation_count(), b.violation_count());
  ASSERT_EQ(a.tight_cases.size(), b.tight_cases.size());
  for (std::size_t i = 0; i < a.tight_cases.size(); ++i) {
    EXPECT_EQ(a.tight_cases[i].graph, b.tight_cases[i].graph);
  }
}

TEST(Verify, NeedsThreeColors) {
  EXPECT_THROW(exhaustive_verify(spec_of(3, 4)), std::invalid_argument);
}
