#include <gtest/gtest.h>

#include "oracle.hpp"
#include "rainbow/canonical.hpp"
#include "rainbow/enumerate.hpp"
#include "rainbow/extremal.hpp"
#include "rainbow/graph_io.hpp"
#include "rainbow/search.hpp"

using namespace rainbow;

namespace {

SearchSpec spec_of(int n, int c, SearchObjective o) {
  SearchSpec s;
  s.n = n;
  s.c = c;
  s.objective = o;
  return s;
}

}  // namespace

TEST(Search, RainbowK4OnFourVertices) {
  const SearchResult r = search_best_density(spec_of(4, 6, SearchObjective::kRainbowK4));
  EXPECT_EQ(r.method, "exhaustive");
  EXPECT_EQ(r.evaluated, 25u);
  ASSERT_FALSE(r.best.empty());
  EXPECT_EQ(r.best[0].count, 1u);
  EXPECT_EQ(r.best[0].density, Rational(24, 252));
  EXPECT_TRUE(is_rainbow_k4(r.best[0].coloring));
}

TEST(Search, RainbowTriangleOnFourVertices) {
  const SearchResult r = search_best_density(spec_of(4, 3, SearchObjective::kRainbowTriangle));
  ASSERT_FALSE(r.best.empty());
  EXPECT_EQ(r.best[0].density, Rational(2, 5));
  EXPECT_EQ(canonical_form(r.best[0].coloring, true), canonical_form(make_proper_k4(), true));
  // Only the proper K4 has four rainbow triangles.
  ASSERT_GE(r.best.size(), 2u);
  EXPECT_LT(r.best[1].count, 4u);
}

TEST(Search, SixColorsOnSixVerticesReaches24Over215) {
  const SearchResult r = search_best_density(spec_of(6, 6, SearchObjective::kRainbowK4));
  EXPECT_EQ(r.method, "exhaustive");
  EXPECT_EQ(r.evaluated, 968093u);
  ASSERT_FALSE(r.best.empty());
  EXPECT_EQ(r.best[0].density, Rational(24, 215));
  EXPECT_EQ(r.best[0].count, 6u);
  EXPECT_EQ(oracle::rainbow_k4(r.best[0].coloring), 6u);
}

TEST(Search, RankingIsSortedAndDensitiesConsistent) {
  SearchSpec s = spec_of(5, 3, SearchObjective::kRainbowTriangle);
  s.top_k = 10;
  const SearchResult r = search_best_density(s);
  ASSERT_EQ(r.best.size(), 10u);
  for (std::size_t i = 0; i + 1 < r.best.size(); ++i) EXPECT_GE(r.best[i].count, r.best[i + 1].count);
  for (const auto& c : r.best) {
    EXPECT_EQ(c.count, oracle::rainbow_triangles(c.coloring, false));
    EXPECT_EQ(c.density, iterated_density(c.coloring, 3, c.count));
  }
}

TEST(Search, HillClimbingIsSeededAndDeterministic) {
  SearchSpec s = spec_of(7, 3, SearchObjective::kRainbowTriangle);
  s.exhaustive_max_n = 4;
  s.restarts = 6;
  s.seed = 17;
  const SearchResult a = search_best_density(s);
  const SearchResult b = search_best_density(s);
  EXPECT_EQ(a.method, "hill-climbing");
  ASSERT_EQ(a.best.size(), b.best.size());
  for (std::size_t i = 0; i < a.best.size(); ++i) {
    EXPECT_EQ(a.best[i].coloring, b.best[i].coloring);
    EXPECT_EQ(a.best[i].count, oracle::rainbow_triangles(a.best[i].coloring, false));
  }
  EXPECT_EQ(a.evaluated, b.evaluated);
}

TEST(Search, HillClimbingFindsLocalOptimaAtLeastAsGoodAsStart) {
  SearchSpec s = spec_of(5, 3, SearchObjective::kRainbowTriangle);
  s.exhaustive_max_n = 0;
  s.restarts = 20;
  const SearchResult r = search_best_density(s);
  ASSERT_FALSE(r.best.empty());
  // The exhaustive optimum for n = 5.
  const SearchResult exact = search_best_density(spec_of(5, 3, SearchObjective::kRainbowTriangle));
  EXPECT_LE(r.best[0].count, exact.best[0].count);
  EXPECT_GT(r.best[0].count, 0u);
}

TEST(Search, Validation) {
  EXPECT_THROW(search_best_density(spec_of(4, 5, SearchObjective::kRainbowK4)), std::invalid_argument);
  EXPECT_THROW(search_best_density(spec_of(3, 6, SearchObjective::kRainbowK4)), std::invalid_argument);
  EXPECT_THROW(search_best_density(spec_of(4, 2, SearchObjective::kRainbowTriangle)), std::invalid_argument);
  SearchSpec s = spec_of(6, 8, SearchObjective::kRainbowK4);
  s.budget = 1000;
  EXPECT_THROW(search_best_density(s), BudgetExceeded);
}
