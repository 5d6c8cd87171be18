#include "rainbow/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <thread>

#include "rainbow/bounds.hpp"
#include "rainbow/counting.hpp"
#include "rainbow/extremal.hpp"
#include "rainbow/graph_io.hpp"
#include "rainbow/transforms.hpp"

namespace rainbow {

std::string to_string(EnumFilter f) {
  return f == EnumFilter::kComplete ? "complete" : "none";
}

void EnumSpec::validate() const {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  if (c < 1) throw std::invalid_argument("c must be >= 1");
  if (n > kMaxCanonVertices) {
    throw std::invalid_argument("enumeration supports at most " +
                                std::to_string(kMaxCanonVertices) + " vertices");
  }
  if (c > kMaxCanonColors) {
    throw std::invalid_argument("enumeration supports at most " +
                                std::to_string(kMaxCanonColors) + " colors");
  }
}

double estimated_classes(const EnumSpec& spec) {
  const double states = spec.filter == EnumFilter::kComplete ? spec.c : spec.c + 1;
  const double pairs = spec.n * (spec.n - 1) / 2.0;
  double denom = std::tgamma(spec.n + 1.0);
  if (spec.modulo_color_symmetry) denom *= std::tgamma(spec.c + 1.0);
  return std::max(1.0, std::pow(states, pairs) / denom);
}

namespace {

void check_budget(const EnumSpec& spec) {
  spec.validate();
  const double est = estimated_classes(spec);
  if (est > spec.budget) {
    throw BudgetExceeded("estimated " + std::to_string(static_cast<long long>(est)) +
                         " classes for n=" + std::to_string(spec.n) +
                         ", c=" + std::to_string(spec.c) + " exceeds the budget of " +
                         std::to_string(static_cast<long long>(spec.budget)));
  }
}

std::vector<std::uint8_t> pair_states(const EnumSpec& spec) {
  std::vector<std::uint8_t> states;
  if (spec.filter != EnumFilter::kComplete) states.push_back(0);
  for (int x = 1; x <= spec.c; ++x) states.push_back(static_cast<std::uint8_t>(x));
  return states;
}

// Children of a canonical parent on k - 1 vertices: every column for the new
// vertex k - 1, in odometer order, keeping the canonical ones.
template <typename F>
void extend(const SmallGraph& parent, const std::vector<std::uint8_t>& states, bool colors,
            F&& emit) {
  const int k = parent.n + 1;
  if (k < 2 || k > kMaxCanonVertices) throw std::logic_error("bad parent size");
  SmallGraph child = parent;
  child.n = k;
  const int last = k - 1;
  std::vector<std::size_t> digit(static_cast<std::size_t>(last), 0);
  for (int i = 0; i < last; ++i) child.set(i, last, states[0]);
  while (true) {
    if (is_canonical(child, colors)) emit(child);
    int pos = 0;
    while (pos < last && ++digit[pos] == states.size()) {
      digit[pos] = 0;
      child.set(pos, last, states[0]);
      ++pos;
    }
    if (pos == last) break;
    child.set(pos, last, states[digit[pos]]);
  }
}

// Canonical graphs on `k` vertices, fully materialized.
std::vector<SmallGraph> level(const EnumSpec& spec, int k) {
  SmallGraph root;
  root.n = std::min(k, 1);
  root.c = spec.c;
  std::vector<SmallGraph> current{root};
  const auto states = pair_states(spec);
  for (int size = 2; size <= k; ++size) {
    std::vector<SmallGraph> next;
    for (const SmallGraph& p : current) {
      extend(p, states, spec.modulo_color_symmetry,
             [&](const SmallGraph& g) { next.push_back(g); });
    }
    current = std::move(next);
  }
  return current;
}

unsigned effective_jobs(unsigned jobs) { return std::max(1u, jobs); }

// Runs f(shard, begin, end) on contiguous slices of [0, total).
template <typename F>
void run_sharded(std::size_t total, unsigned jobs, F&& f) {
  jobs = static_cast<unsigned>(std::min<std::size_t>(effective_jobs(jobs), std::max<std::size_t>(total, 1)));
  if (jobs == 1) {
    f(0u, std::size_t{0}, total);
    return;
  }
  std::vector<std::thread> threads;
  const std::size_t step = (total + jobs - 1) / jobs;
  for (unsigned t = 0; t < jobs; ++t) {
    const std::size_t begin = std::min(total, t * step);
    const std::size_t end = std::min(total, begin + step);
    threads.emplace_back([&f, t, begin, end] { f(t, begin, end); });
  }
  for (auto& th : threads) th.join();
}

}  // namespace

void enumerate(const EnumSpec& spec, const GraphVisitor& visit, unsigned jobs) {
  check_budget(spec);
  if (spec.n <= 1) {
    for (const SmallGraph& g : level(spec, spec.n)) visit(g);
    return;
  }
  const std::vector<SmallGraph> parents = level(spec, spec.n - 1);
  const auto states = pair_states(spec);
  const bool colors = spec.modulo_color_symmetry;
  if (effective_jobs(jobs) == 1) {
    for (const SmallGraph& p : parents) extend(p, states, colors, visit);
    return;
  }
  // Chunks of parents bound the memory held between expansion and visiting.
  const std::size_t chunk = 64 * static_cast<std::size_t>(jobs);
  for (std::size_t first = 0; first < parents.size(); first += chunk) {
    const std::size_t count = std::min(chunk, parents.size() - first);
    std::vector<std::vector<SmallGraph>> out(jobs);
    run_sharded(count, jobs, [&](unsigned t, std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i) {
        extend(parents[first + i], states, colors,
               [&](const SmallGraph& g) { out[t].push_back(g); });
      }
    });
    for (const auto& part : out) {
      for (const SmallGraph& g : part) visit(g);
    }
  }
}

Count count_classes(const EnumSpec& spec, unsigned jobs) {
  check_budget(spec);
  if (spec.n <= 1) return 1;
  const std::vector<SmallGraph> parents = level(spec, spec.n - 1);
  const auto states = pair_states(spec);
  std::vector<Count> partial(effective_jobs(jobs), 0);
  run_sharded(parents.size(), jobs, [&](unsigned t, std::size_t b, std::size_t e) {
    Count local = 0;
    for (std::size_t i = b; i < e; ++i) {
      extend(parents[i], states, spec.modulo_color_symmetry,
             [&](const SmallGraph&) { ++local; });
    }
    partial[t] = local;
  });
  Count total = 0;
  for (Count x : partial) total = checked_add(total, x);
  return total;
}

// Exhaustive verification ----------------------------------------------------

const std::vector<std::string>& verification_checks() {
  static const std::vector<std::string> names{
      "triangle_bound",        "k4_min_bound",        "k4_geom_bound",
      "injection",             "s_leq_s_prime",       "pair_square_sums",
      "triangle_pair_sum",     "k4_pair_sum",         "triangle_equality_link",
      "k4_equality_link",
  };
  return names;
}

Count VerificationReport::violation_count() const {
  Count total = 0;
  for (const auto& [name, list] : violations) total += list.size();
  return total;
}

namespace {

struct PartialReport {
  Count seen = 0;
  std::map<std::string, std::vector<CheckViolation>> violations;
  std::vector<TightCase> tight;
};

std::string describe(const BoundReport& r) {
  return to_string(r.id) + ": " + to_string(r.lhs) + " > " + to_string(r.rhs);
}

void verify_one(const ColoredGraph& g, PartialReport& out) {
  ++out.seen;
  std::string text;
  const auto fail = [&](const std::string& check, std::string detail) {
    if (text.empty()) text = serialize_graph(g);
    out.violations[check].push_back({text, std::move(detail)});
  };

  const BoundReport tri = check_triangle_bound(g);
  if (!tri.holds) fail("triangle_bound", describe(tri));
  const K4BoundReports k4 = check_k4_bounds(g);
  if (!k4.min_form.holds) fail("k4_min_bound", describe(k4.min_form));
  if (!k4.geom_form.holds) fail("k4_geom_bound", describe(k4.geom_form));

  const InjectionCheck inj = verify_injection(g);
  if (!inj.violations.empty()) {
    fail("injection", std::to_string(inj.violations.size()) + " violations, first " +
                          to_string(inj.violations.front().kind));
  }
  if (inj.s_size > inj.s_prime_size) {
    fail("s_leq_s_prime", std::to_string(inj.s_size) + " > " + std::to_string(inj.s_prime_size));
  }

  const GraphCounter counter(g);
  const RedPairSums sums = counter.red_pair_sums();
  if (sums.sum_d_plus_sq != sums.sum_d_minus_sq) {
    fail("pair_square_sums",
         std::to_string(sums.sum_d_plus_sq) + " != " + std::to_string(sums.sum_d_minus_sq));
  }
  const Count t = counter.rainbow_triangles(ColorRoles{});
  const Count k = counter.proper_k4(ColorRoles{});
  if (sums.sum_d_plus != t) {
    fail("triangle_pair_sum", std::to_string(sums.sum_d_plus) + " != " + std::to_string(t));
  }
  if (sums.sum_d_k != 4 * k) {
    fail("k4_pair_sum", std::to_string(sums.sum_d_k) + " != " + std::to_string(4 * k));
  }

  const bool tri_tight = tri.tight && t > 0;
  const bool k4_tight = k4.geom_form.tight && k > 0;
  const auto [core, removed] = strip_isolated(g);
  const RecognitionResult rec = recognize_balanced_blowup(core);
  if (tri_tight != rec.certified()) {
    fail("triangle_equality_link", std::string("tight=") + (tri_tight ? "true" : "false") +
                                       " recognition=" + to_string(rec.verdict));
  }
  if (k4_tight != rec.certified()) {
    fail("k4_equality_link", std::string("tight=") + (k4_tight ? "true" : "false") +
                                 " recognition=" + to_string(rec.verdict));
  }
  if (tri_tight || k4_tight) {
    TightCase tc;
    tc.graph = text.empty() ? serialize_graph(g) : text;
    tc.triangle_tight = tri_tight;
    tc.k4_tight = k4_tight;
    tc.certified = rec.certified();
    tc.d = rec.certificate ? rec.certificate->d : 0;
    tc.isolated = removed;
    out.tight.push_back(std::move(tc));
  }
}

}  // namespace

VerificationReport exhaustive_verify(const EnumSpec& spec, unsigned jobs) {
  if (spec.c != 3) throw std::invalid_argument("exhaustive verification needs c = 3");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.spec = spec;
  for (const auto& name : verification_checks()) report.violations[name];

  jobs = effective_jobs(jobs);
  std::vector<SmallGraph> batch;
  const std::size_t batch_size = 4096;
  const auto flush = [&] {
    std::vector<PartialReport> parts(jobs);
    run_sharded(batch.size(), jobs, [&](unsigned t, std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i) verify_one(batch[i].to_graph(), parts[t]);
    });
    for (auto& p : parts) {
      report.graphs_seen += p.seen;
      for (auto& [name, list] : p.violations) {
        auto& dst = report.violations[name];
        dst.insert(dst.end(), list.begin(), list.end());
      }
      report.tight_cases.insert(report.tight_cases.end(), p.tight.begin(), p.tight.end());
    }
    batch.clear();
  };
  enumerate(spec, [&](const SmallGraph& g) {
    batch.push_back(g);
    if (batch.size() == batch_size) flush();
  });
  flush();

  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.graphs_per_second =
      report.seconds > 0 ? static_cast<double>(report.graphs_seen) / report.seconds : 0.0;
  return report;
}

}  // namespace rainbow
