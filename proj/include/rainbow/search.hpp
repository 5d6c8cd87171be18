#ifndef RAINBOW_SEARCH_HPP
#define RAINBOW_SEARCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rainbow/colored_graph.hpp"
#include "rainbow/exact.hpp"

namespace rainbow {

enum class SearchObjective {
  kRainbowTriangle,  // p = 3, needs c >= 3
  kRainbowK4,        // p = 4, needs c >= 6
};

std::string to_string(SearchObjective o);
int pattern_size(SearchObjective o);

struct SearchSpec {
  int n = 4;
  int c = 3;
  SearchObjective objective = SearchObjective::kRainbowTriangle;
  int top_k = 5;
  /// Largest n searched exhaustively; beyond it, seeded hill climbing.
  int exhaustive_max_n = 6;
  /// Budget on the estimated number of complete colorings up to symmetry.
  double budget = 5e6;
  std::uint64_t seed = 1;
  int restarts = 32;
  int max_steps = 10000;
  unsigned jobs = 1;
};

struct SearchCandidate {
  ColoredGraph coloring;
  Count count = 0;
  Rational density;  // iterated density p! cnt / (n^p - n)
};

struct SearchResult {
  std::string method;  // "exhaustive" or "hill-climbing"
  Count evaluated = 0;
  std::vector<SearchCandidate> best;  // sorted by count, descending
};

/// Ranks complete colorings of K_n with c colors by the limiting density of
/// the objective pattern in their iterated balanced blowup. Exhaustive (one
/// coloring per class under vertex and color permutations) up to
/// exhaustive_max_n; otherwise seeded restarts of steepest-ascent single-edge
/// recoloring. Throws BudgetExceeded or std::invalid_argument.
SearchResult search_best_density(const SearchSpec& spec);

}  // namespace rainbow

#endif  // RAINBOW_SEARCH_HPP
