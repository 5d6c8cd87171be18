#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "rainbow/counting.hpp"
#include "rainbow/enumerate.hpp"
#include "rainbow/extremal.hpp"
#include "rainbow/graph_io.hpp"
#include "rainbow/transforms.hpp"

using namespace rainbow;

namespace {

// Asserts every fast counter against its oracle on one graph.
void expect_matches_oracle(const ColoredGraph& g) {
  const GraphCounter counter(g);
  const ColorCounts cc = counter.color_counts();
  for (Color x = 1; x <= g.color_count(); ++x) {
    ASSERT_EQ(cc.of(x), oracle::color_count(g, x)) << serialize_graph(g);
  }
  if (g.color_count() < 3) return;
  ASSERT_EQ(counter.rainbow_triangles(ColorRoles{}), oracle::rainbow_triangles(g, true))
      << serialize_graph(g);
  ASSERT_EQ(counter.rainbow_triangles(), oracle::rainbow_triangles(g, false)) << serialize_graph(g);
  ASSERT_EQ(counter.proper_k4(ColorRoles{}), oracle::proper_k4(g, true)) << serialize_graph(g);
  ASSERT_EQ(counter.proper_k4(), oracle::proper_k4(g, false)) << serialize_graph(g);
  ASSERT_EQ(counter.s_size(), oracle::s_tuples(g).size()) << serialize_graph(g);
  ASSERT_EQ(counter.s_prime_size(), oracle::color_count(g, 2) * oracle::color_count(g, 3));
  for (const Edge& e : g.edges()) {
    if (e.color != kRed) continue;
    for (const auto& [u, v] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      const RedPairStats s = counter.red_pair_stats(u, v);
      const oracle::PairStats o = oracle::pair_stats(g, u, v);
      ASSERT_EQ(s.d_plus, o.d_plus);
      ASSERT_EQ(s.d_minus, o.d_minus);
      ASSERT_EQ(s.d_k, o.d_k);
    }
  }
  if (g.color_count() >= 6) {
    ASSERT_EQ(counter.rainbow_k4(), oracle::rainbow_k4(g)) << serialize_graph(g);
    for (const ColoredGraph& p : rainbow_k4_patterns(g)) {
      ASSERT_EQ(counter.fixed_rainbow_k4(p), oracle::embeddings(g, p)) << serialize_graph(g);
    }
  }
}

}  // namespace

TEST(Counting, ProperK4Example) {
  const ColoredGraph g = make_proper_k4();
  const GraphCounter counter(g);
  EXPECT_EQ(counter.color_counts().red(), 2u);
  EXPECT_EQ(counter.rainbow_triangles(ColorRoles{}), 4u);
  EXPECT_EQ(counter.proper_k4(ColorRoles{}), 1u);
  EXPECT_EQ(counter.s_size(), 4u);
  EXPECT_EQ(counter.s_prime_size(), 4u);
}

TEST(Counting, EmptyAndTinyGraphs) {
  for (int n = 0; n <= 3; ++n) {
    const ColoredGraph g(n, 3);
    const GraphCounter counter(g);
    EXPECT_EQ(counter.rainbow_triangles(), 0u);
    EXPECT_EQ(counter.proper_k4(), 0u);
    EXPECT_EQ(counter.s_size(), 0u);
    EXPECT_EQ(counter.color_counts().total(), 0u);
  }
}

TEST(Counting, ColorRequirements) {
  const ColoredGraph two(4, 2);
  EXPECT_THROW(count_rainbow_triangles(two), std::invalid_argument);
  EXPECT_THROW(count_rainbow_k4(make_proper_k4()), std::invalid_argument);
  EXPECT_THROW(red_pair_stats(make_proper_k4(), 0, 2), std::invalid_argument);  // green pair
}

TEST(Counting, SixColorExamples) {
  EXPECT_EQ(count_rainbow_k4(make_k6_sum_coloring()), 6u);
  EXPECT_EQ(count_rainbow_k4(make_rainbow_k4()), 1u);
  EXPECT_TRUE(is_rainbow_k4(make_rainbow_k4()));
  EXPECT_FALSE(is_rainbow_k4(make_proper_k4()));
  EXPECT_EQ(count_fixed_rainbow_k4(make_rainbow_k4(), make_rainbow_k4()), 1u);
}

TEST(Counting, Z6RainbowK4Sets) {
  const ColoredGraph g = make_k6_sum_coloring();
  std::vector<std::array<int, 4>> found;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c)
        for (int d = c + 1; d < 6; ++d) {
          const std::array<int, 4> s{a, b, c, d};
          if (count_rainbow_k4(induced_subgraph(g, s)) == 1) found.push_back(s);
        }
  const std::vector<std::array<int, 4>> expected{{0, 1, 2, 4}, {0, 1, 3, 5}, {0, 2, 3, 4},
                                                 {0, 2, 4, 5}, {1, 2, 3, 5}, {1, 3, 4, 5}};
  EXPECT_EQ(found, expected);
}

TEST(Counting, OracleOnAllSmallGraphs) {
  for (int n = 0; n <= 4; ++n) {
    EnumSpec spec;
    spec.n = n;
    spec.c = 3;
    enumerate(spec, [](const SmallGraph& sg) { expect_matches_oracle(sg.to_graph()); });
  }
}

TEST(Counting, OracleOnRandomGraphs) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng() % 13);
    const int c = trial % 2 == 0 ? 3 : 6;
    const double absent = (rng() % 4) * 0.2;
    expect_matches_oracle(oracle::random_graph(n, c, absent, rng));
  }
}

TEST(Counting, OracleOnWideGraphs) {
  // Rows longer than one 64-bit word.
  std::mt19937_64 rng(99);
  const ColoredGraph g = oracle::random_graph(70, 3, 0.5, rng);
  const GraphCounter counter(g);
  EXPECT_EQ(counter.rainbow_triangles(ColorRoles{}), oracle::rainbow_triangles(g, true));
  EXPECT_EQ(counter.s_size(), oracle::s_tuples(g).size());
}

TEST(Counting, PairSumIdentitiesProperty) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const ColoredGraph g = oracle::random_graph(n, 3, 0.25, rng);
    const GraphCounter counter(g);
    const RedPairSums sums = counter.red_pair_sums();
    ASSERT_EQ(sums.sum_d_plus, counter.rainbow_triangles(ColorRoles{}));
    ASSERT_EQ(sums.sum_d_minus, counter.rainbow_triangles(ColorRoles{}));
    ASSERT_EQ(sums.sum_d_plus_sq, sums.sum_d_minus_sq);
    ASSERT_EQ(sums.sum_d_k, 4 * counter.proper_k4(ColorRoles{}));
    ASSERT_EQ(sums.sum_d_plus_sq, counter.s_size());
    ASSERT_EQ(sums.ordered_red_pairs, 2 * counter.color_counts().red());
    for (const Edge& e : g.edges()) {
      if (e.color != kRed) continue;
      const RedPairStats s = counter.red_pair_stats(e.u, e.v);
      ASSERT_LE(s.d_k, s.d_minus * s.d_plus);
    }
  }
}

TEST(Counting, RolesSelectColors) {
  // A rainbow triangle in colors 4, 5, 6 counts only with matching roles.
  const std::array<Edge, 3> tri{{{0, 1, 4}, {1, 2, 5}, {0, 2, 6}}};
  const ColoredGraph g = ColoredGraph::from_edges(3, 6, tri);
  const GraphCounter counter(g);
  EXPECT_EQ(counter.rainbow_triangles(ColorRoles{}), 0u);
  EXPECT_EQ(counter.rainbow_triangles(ColorRoles{4, 5, 6}), 1u);
  EXPECT_EQ(counter.rainbow_triangles(), 1u);
}

TEST(Counting, InducedCopiesAgainstOracle) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 60; ++trial) {
    const ColoredGraph g = oracle::random_graph(7, 3, 0.3, rng);
    const int p = 2 + static_cast<int>(rng() % 3);
    const ColoredGraph pattern = oracle::random_graph(p, 3, 0.3, rng);
    ASSERT_EQ(count_induced_copies(g, pattern), oracle::induced_copies(g, pattern));
  }
  EXPECT_EQ(subgraph_density(make_proper_k4(), make_proper_k4()), Rational(1));
  EXPECT_THROW(subgraph_density(ColoredGraph(3, 3), make_proper_k4()), std::invalid_argument);
}

TEST(Counting, StripIsolatedPreservesCounts) {
  std::mt19937_64 rng(66);
  for (int trial = 0; trial < 50; ++trial) {
    const ColoredGraph g = add_isolated(oracle::random_graph(6, 6, 0.4, rng), 3);
    const ColoredGraph s = strip_isolated(g).first;
    ASSERT_EQ(count_rainbow_triangles(s), count_rainbow_triangles(g));
    ASSERT_EQ(count_proper_k4(s), count_proper_k4(g));
    ASSERT_EQ(count_rainbow_k4(s), count_rainbow_k4(g));
    ASSERT_EQ(count_s(s), count_s(g));
  }
}
