#include "rainbow/search.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "rainbow/canonical.hpp"
#include "rainbow/counting.hpp"
#include "rainbow/enumerate.hpp"
#include "rainbow/extremal.hpp"
#include "rainbow/graph_io.hpp"

namespace rainbow {

std::string to_string(SearchObjective o) {
  return o == SearchObjective::kRainbowK4 ? "rainbow-k4" : "rainbow-triangle";
}

int pattern_size(SearchObjective o) { return o == SearchObjective::kRainbowK4 ? 4 : 3; }

namespace {

Count objective_count(const ColoredGraph& g, SearchObjective o) {
  return o == SearchObjective::kRainbowK4 ? count_rainbow_k4(g) : count_rainbow_triangles(g);
}

// Keeps the top_k candidates by count; earlier arrivals win ties.
class TopK {
 public:
  TopK(int k, SearchObjective o, int n) : k_(k), objective_(o), n_(n) {}

  bool would_accept(Count count) const {
    return static_cast<int>(best_.size()) < k_ || count > best_.back().count;
  }

  void offer(const ColoredGraph& g, Count count) {
    if (!would_accept(count)) return;
    SearchCandidate cand;
    cand.coloring = g;
    cand.count = count;
    cand.density = iterated_density(n_, pattern_size(objective_), count);
    const auto pos = std::upper_bound(
        best_.begin(), best_.end(), count,
        [](Count value, const SearchCandidate& c) { return value > c.count; });
    best_.insert(pos, std::move(cand));
    if (static_cast<int>(best_.size()) > k_) best_.pop_back();
  }

  std::vector<SearchCandidate> take() { return std::move(best_); }

 private:
  int k_;
  SearchObjective objective_;
  int n_;
  std::vector<SearchCandidate> best_;
};

void validate(const SearchSpec& spec) {
  if (spec.n < 2) throw std::invalid_argument("search needs n >= 2");
  if (spec.top_k < 1) throw std::invalid_argument("top_k must be >= 1");
  const int need = spec.objective == SearchObjective::kRainbowK4 ? 6 : 3;
  if (spec.c < need) {
    throw std::invalid_argument(to_string(spec.objective) + " needs at least " +
                                std::to_string(need) + " colors");
  }
  if (spec.n < pattern_size(spec.objective)) {
    throw std::invalid_argument("n is smaller than the pattern");
  }
}

SearchResult exhaustive(const SearchSpec& spec) {
  EnumSpec es;
  es.n = spec.n;
  es.c = spec.c;
  es.modulo_color_symmetry = true;
  es.filter = EnumFilter::kComplete;
  es.budget = spec.budget;
  SearchResult result;
  result.method = "exhaustive";
  TopK top(spec.top_k, spec.objective, spec.n);
  enumerate(
      es,
      [&](const SmallGraph& sg) {
        const ColoredGraph g = sg.to_graph();
        top.offer(g, objective_count(g, spec.objective));
        ++result.evaluated;
      },
      spec.jobs);
  result.best = top.take();
  return result;
}

ColoredGraph random_coloring(int n, int c, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(1, c);
  ColoredGraph g(n, c);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.set_color(u, v, pick(rng));
  }
  return g;
}

std::string dedupe_key(const ColoredGraph& g) {
  if (g.vertex_count() <= kMaxCanonVertices && g.color_count() <= kMaxCanonColors) {
    return SmallGraph::from(canonical_form(g, true)).code();
  }
  return serialize_graph(g);
}

SearchResult hill_climb(const SearchSpec& spec) {
  SearchResult result;
  result.method = "hill-climbing";
  TopK top(spec.top_k, spec.objective, spec.n);
  std::set<std::string> seen;
  for (int r = 0; r < spec.restarts; ++r) {
    std::mt19937_64 rng(spec.seed + static_cast<std::uint64_t>(r));
    ColoredGraph g = random_coloring(spec.n, spec.c, rng);
    Count current = objective_count(g, spec.objective);
    ++result.evaluated;
    for (int step = 0; step < spec.max_steps; ++step) {
      // Steepest ascent over single-pair recolorings; first best move wins.
      Count best = current;
      Edge move{};
      for (Vertex u = 0; u < spec.n; ++u) {
        for (Vertex v = u + 1; v < spec.n; ++v) {
          const Color old = g.color(u, v);
          for (Color x = 1; x <= spec.c; ++x) {
            if (x == old) continue;
            g.set_color(u, v, x);
            const Count cnt = objective_count(g, spec.objective);
            ++result.evaluated;
            if (cnt > best) {
              best = cnt;
              move = {u, v, x};
            }
          }
          g.set_color(u, v, old);
        }
      }
      if (best == current) break;
      g.set_color(move.u, move.v, move.color);
      current = best;
    }
    if (top.would_accept(current) && seen.insert(dedupe_key(g)).second) {
      top.offer(g, current);
    }
  }
  result.best = top.take();
  return result;
}

}  // namespace

SearchResult search_best_density(const SearchSpec& spec) {
  validate(spec);
  const int limit = std::min(spec.exhaustive_max_n, kMaxCanonVertices);
  return spec.n <= limit ? exhaustive(spec) : hill_climb(spec);
}

}  // namespace rainbow
