#ifndef RAINBOW_ENUMERATE_HPP
#define RAINBOW_ENUMERATE_HPP

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbow/canonical.hpp"
#include "rainbow/colored_graph.hpp"
#include "rainbow/exact.hpp"

namespace rainbow {

enum class EnumFilter {
  kNone,
  kComplete,  // every pair colored; no non-edges
};

std::string to_string(EnumFilter f);

struct EnumSpec {
  int n = 0;
  int c = 3;
  bool modulo_color_symmetry = false;
  EnumFilter filter = EnumFilter::kNone;
  /// Upper limit on the estimated number of classes.
  double budget = 5e6;

  /// Throws std::invalid_argument on n < 0, c < 1 or sizes beyond the
  /// canonical-form limits.
  void validate() const;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rough class count: states^pairs / (n! [* c!]).
double estimated_classes(const EnumSpec& spec);

using GraphVisitor = std::function<void(const SmallGraph&)>;

/// Calls `visit` once per isomorphism class, on its canonical representative,
/// in a fixed order. Graphs on n vertices are grown from canonical graphs on
/// n - 1 vertices by adding a last vertex in every possible way and keeping
/// the canonical results. With jobs > 1 the last level is split across
/// threads; visiting order is unchanged. Throws BudgetExceeded.
void enumerate(const EnumSpec& spec, const GraphVisitor& visit, unsigned jobs = 1);

Count count_classes(const EnumSpec& spec, unsigned jobs = 1);

// Exhaustive verification (c = 3) ---------------------------------------------

struct CheckViolation {
  std::string graph;  // text format
  std::string detail;
};

struct TightCase {
  std::string graph;  // text format
  bool triangle_tight = false;  // T^2 = 2RGB with T > 0
  bool k4_tight = false;        // (4K)^3 = (RGB)^2 with K > 0
  bool certified = false;       // strip isolated + recognize
  int d = 0;
  int isolated = 0;
};

struct VerificationReport {
  EnumSpec spec;
  Count graphs_seen = 0;
  /// One entry per check name, present even when empty.
  std::map<std::string, std::vector<CheckViolation>> violations;
  std::vector<TightCase> tight_cases;
  double seconds = 0.0;
  double graphs_per_second = 0.0;

  Count violation_count() const;
  bool clean() const { return violation_count() == 0; }
};

/// Check names used as keys of VerificationReport::violations.
const std::vector<std::string>& verification_checks();

/// Runs the bound checks, the injection check, the pair-sum identities and
/// the tightness/recognition equivalences on every enumerated graph.
/// Needs spec.c == 3.
VerificationReport exhaustive_verify(const EnumSpec& spec, unsigned jobs = 1);

}  // namespace rainbow

#endif  // RAINBOW_ENUMERATE_HPP
