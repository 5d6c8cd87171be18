#include "rainbow/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>

#include "rainbow/bounds.hpp"
#include "rainbow/counting.hpp"
#include "rainbow/enumerate.hpp"
#include "rainbow/extremal.hpp"
#include "rainbow/graph_io.hpp"
#include "rainbow/search.hpp"
#include "rainbow/transforms.hpp"

namespace rainbow::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string file;
  bool timing = false;
  unsigned jobs = 1;

  // check
  std::string bound = "all";
  std::string pattern_file;

  // blowup / construct
  std::optional<int> uniform;
  std::vector<int> sizes;
  int depth = 1;
  std::string output;
  std::string construction;

  // enumerate / verify / search
  int n = 0;
  int c = 3;
  bool color_sym = false;
  bool complete = false;
  std::string emit;
  std::string emit_dir;
  double budget = 5e6;
  std::string objective = "triangle";
  int top = 5;
  std::uint64_t seed = 1;
  int restarts = 32;
  int max_steps = 10000;
  int exhaustive_max_n = 6;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Failed I/O on a path named by the user.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string big(const BigInt& v) { return to_string(v); }

Json bound_json(const BoundReport& r) {
  static const std::map<BoundId, const char*> statement{
      {BoundId::kTriangle, "T^2 <= 2*R*G*B"},
      {BoundId::kK4Min, "4K <= min(R*G, G*B, R*B)"},
      {BoundId::kK4Geom, "(4K)^3 <= (R*G*B)^2"},
      {BoundId::kFixedRainbowK4, "H^3 <= product of C_i over the pattern's colors"},
      {BoundId::kSLeqSPrime, "|S| <= |S'|"},
      {BoundId::kRainbowK4Conjecture, "(rainbow K4)^3 <= product of C_i over all colors"},
  };
  Json j;
  j["bound"] = to_string(r.id);
  j["statement"] = statement.at(r.id);
  j["lhs"] = big(r.lhs);
  j["rhs"] = big(r.rhs);
  j["holds"] = r.holds;
  j["tight"] = r.tight;
  j["slack"] = big(r.slack);
  j["conjecture"] = r.conjecture;
  return j;
}

Json edge_json(const Edge& e) { return Json::array({e.u, e.v, e.color}); }

Json input_json(const std::string& path, const ColoredGraph& g) {
  Json j;
  j["path"] = path;
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  j["c"] = g.color_count();
  return j;
}

ColoredGraph load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph(buf.str());
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("write failed for '" + path + "'");
}

struct Outcome {
  Json input = nullptr;
  Json flags = Json::object();
  Json results = Json::object();
  Json seed = nullptr;
  int exit_code = kExitOk;
  std::string summary;
  // Set when the command writes something other than a report to stdout.
  std::optional<std::string> raw_stdout;
};

// Commands ----------------------------------------------------------------

Outcome cmd_count(const Options& o) {
  const ColoredGraph g = load(o.file);
  Outcome out;
  out.input = input_json(o.file, g);
  const GraphCounter counter(g);
  const ColorCounts cc = counter.color_counts();
  Json& r = out.results;
  Json per_color = Json::array();
  for (Color x = 1; x <= g.color_count(); ++x) per_color.push_back(cc.of(x));
  r["per_color"] = per_color;
  r["edges"] = cc.total();
  const bool three = g.color_count() >= 3;
  r["R"] = three ? Json(cc.red()) : Json(nullptr);
  r["G"] = three ? Json(cc.green()) : Json(nullptr);
  r["B"] = three ? Json(cc.blue()) : Json(nullptr);
  r["T"] = three ? Json(counter.rainbow_triangles(ColorRoles{})) : Json(nullptr);
  r["K"] = three ? Json(counter.proper_k4(ColorRoles{})) : Json(nullptr);
  r["S"] = three ? Json(counter.s_size()) : Json(nullptr);
  r["S_prime"] = three ? Json(counter.s_prime_size()) : Json(nullptr);
  r["rainbow_triangles_any_colors"] =
      three ? Json(counter.rainbow_triangles()) : Json(nullptr);
  r["proper_k4_any_colors"] = three ? Json(counter.proper_k4()) : Json(nullptr);
  r["rainbow_k4"] = g.color_count() >= 6 ? Json(counter.rainbow_k4()) : Json(nullptr);

  std::ostringstream s;
  s << "n=" << g.vertex_count() << " m=" << g.edge_count() << " c=" << g.color_count();
  if (three) {
    s << "  R=" << cc.red() << " G=" << cc.green() << " B=" << cc.blue()
      << "  T=" << r["T"] << " K=" << r["K"] << " |S|=" << r["S"] << " |S'|=" << r["S_prime"];
  }
  if (g.color_count() >= 6) s << "  rainbow K4=" << r["rainbow_k4"];
  out.summary = s.str();
  return out;
}

Outcome cmd_check(const Options& o) {
  const ColoredGraph g = load(o.file);
  Outcome out;
  out.input = input_json(o.file, g);
  out.flags["bound"] = o.bound;
  out.flags["pattern"] = o.pattern_file.empty() ? Json(nullptr) : Json(o.pattern_file);

  const bool all = o.bound == "all";
  const bool three = g.color_count() >= 3;
  const bool six = g.color_count() >= 6;
  const auto need = [&](bool ok, const std::string& what) {
    if (!ok) throw UsageError("--bound=" + o.bound + " needs at least " + what);
  };

  std::vector<BoundReport> reports;
  Json injection = nullptr;
  if (o.bound == "triangle" || (all && three)) {
    need(three, "3 colors");
    reports.push_back(check_triangle_bound(g));
  }
  if (o.bound == "k4" || (all && three)) {
    need(three, "3 colors");
    const K4BoundReports k4 = check_k4_bounds(g);
    reports.push_back(k4.min_form);
    reports.push_back(k4.geom_form);
  }
  if (o.bound == "injection" || (all && three)) {
    need(three, "3 colors");
    const InjectionCheck check = verify_injection(g);
    reports.push_back(s_bound_report(check));
    injection = Json::object();
    injection["S"] = check.s_size;
    injection["S_prime"] = check.s_prime_size;
    Json violations = Json::array();
    for (const auto& v : check.violations) {
      Json jv;
      jv["kind"] = to_string(v.kind);
      jv["tuple"] = Json::array({v.tuple.u, v.tuple.v, v.tuple.x, v.tuple.y});
      violations.push_back(jv);
    }
    injection["violations"] = violations;
  }
  if (o.bound == "fixed-rainbow" || (all && six)) {
    std::vector<ColoredGraph> patterns;
    if (!o.pattern_file.empty()) {
      patterns.push_back(load(o.pattern_file));
      if (!is_rainbow_k4(patterns.back())) {
        throw UsageError("pattern '" + o.pattern_file + "' is not a rainbow K4");
      }
    } else {
      need(six, "6 colors (or --pattern)");
      patterns = rainbow_k4_patterns(g);
    }
    for (const auto& p : patterns) reports.push_back(check_fixed_rainbow_bound(g, p));
  }
  if (o.bound == "conjecture" || (all && six)) {
    need(six, "6 colors");
    reports.push_back(check_rainbow_k4_conjecture(g));
  }

  Json list = Json::array();
  bool proven_failed = false;
  bool conjecture_failed = false;
  std::ostringstream s;
  for (const auto& r : reports) {
    list.push_back(bound_json(r));
    if (!r.holds) (r.conjecture ? conjecture_failed : proven_failed) = true;
    s << to_string(r.id) << ": " << big(r.lhs) << (r.holds ? " <= " : " > ") << big(r.rhs)
      << (r.tight ? " (tight)" : "") << (r.conjecture ? " [conjecture]" : "") << "\n";
  }
  if (injection.is_object() && !injection["violations"].empty()) proven_failed = true;
  out.results["bounds"] = list;
  out.results["injection"] = injection;
  out.results["proven_bounds_hold"] = !proven_failed;
  out.results["conjecture_failed"] = conjecture_failed;
  if (proven_failed) {
    out.exit_code = kExitViolation;
    s << "PROVEN BOUND VIOLATED\n";
  }
  out.summary = s.str();
  if (!out.summary.empty() && out.summary.back() == '\n') out.summary.pop_back();
  return out;
}

Outcome cmd_recognize(const Options& o) {
  const ColoredGraph g = load(o.file);
  if (g.color_count() != 3) throw UsageError("recognize needs exactly 3 colors");
  Outcome out;
  out.input = input_json(o.file, g);
  const auto [core, removed] = strip_isolated(g);
  // Map core ids back to input ids; stripping keeps relative order.
  std::vector<Vertex> original;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 0) original.push_back(v);
  }
  const RecognitionResult rec = recognize_balanced_blowup(core);
  Json& r = out.results;
  r["verdict"] = to_string(rec.verdict);
  r["isolated_removed"] = removed;
  if (rec.certificate) {
    const auto& cert = *rec.certificate;
    r["d"] = cert.d;
    Json parts = Json::object();
    const char* names[4] = {"V_R", "V_G", "V_B", "V_0"};
    for (int p = 0; p < 4; ++p) {
      Json ids = Json::array();
      for (Vertex v : cert.parts[p]) ids.push_back(original[v]);
      parts[names[p]] = ids;
    }
    r["parts"] = parts;
    r["violation"] = nullptr;
  } else {
    r["d"] = nullptr;
    r["parts"] = nullptr;
    const auto& v = *rec.violation;
    Json jv;
    jv["condition"] = to_string(v.condition);
    jv["detail"] = v.detail;
    const auto lift = [&](Edge e) {
      e.u = original[e.u];
      e.v = original[e.v];
      return edge_json(e);
    };
    jv["edge_pair"] = v.edge_pair
                          ? Json::array({lift(v.edge_pair->first), lift(v.edge_pair->second)})
                          : Json(nullptr);
    if (v.vertex) {
      Json jd;
      jd["vertex"] = original[v.vertex->vertex];
      Json degs = Json::array();
      for (Color x = 1; x <= 3; ++x) degs.push_back(v.vertex->per_color_degree[x]);
      jd["per_color_degree"] = degs;
      jv["vertex"] = jd;
    } else {
      jv["vertex"] = nullptr;
    }
    jv["pair"] = v.pair ? lift(*v.pair) : Json(nullptr);
    r["violation"] = jv;
  }
  out.summary = to_string(rec.verdict) +
                (rec.certificate ? " d=" + std::to_string(rec.certificate->d)
                                 : " condition " + to_string(rec.violation->condition) + ": " +
                                       rec.violation->detail);
  return out;
}

Outcome cmd_blowup(const Options& o) {
  const ColoredGraph base = load(o.file);
  BlowupSpec spec;
  if (o.uniform && !o.sizes.empty()) throw UsageError("give either --uniform or --sizes");
  if (o.uniform) {
    spec = BlowupSpec::uniform(base, *o.uniform, o.depth);
  } else if (!o.sizes.empty()) {
    spec.base = base;
    spec.sizes = o.sizes;
    spec.depth = o.depth;
  } else {
    throw UsageError("blowup needs --uniform or --sizes");
  }
  const ColoredGraph g = blowup(spec);
  const std::string text = serialize_graph(g);
  Outcome out;
  out.input = input_json(o.file, base);
  out.flags["uniform"] = o.uniform ? Json(*o.uniform) : Json(nullptr);
  out.flags["sizes"] = o.sizes;
  out.flags["depth"] = o.depth;
  out.flags["output"] = o.output.empty() ? Json(nullptr) : Json(o.output);
  out.results["n"] = g.vertex_count();
  out.results["m"] = g.edge_count();
  out.results["c"] = g.color_count();
  out.summary = "blowup: n=" + std::to_string(g.vertex_count()) +
                " m=" + std::to_string(g.edge_count());
  if (o.output.empty()) {
    out.raw_stdout = text;
  } else {
    write_text(o.output, text);
  }
  return out;
}

EnumSpec enum_spec(const Options& o) {
  EnumSpec spec;
  spec.n = o.n;
  spec.c = o.c;
  spec.modulo_color_symmetry = o.color_sym;
  spec.filter = o.complete ? EnumFilter::kComplete : EnumFilter::kNone;
  spec.budget = o.budget;
  spec.validate();
  return spec;
}

Json enum_flags(const Options& o) {
  Json f;
  f["n"] = o.n;
  f["c"] = o.c;
  f["color_sym"] = o.color_sym;
  f["complete"] = o.complete;
  f["budget"] = o.budget;
  f["jobs"] = o.jobs;
  return f;
}

// Published class counts for three colors on six vertices.
std::optional<Count> reference_count(const EnumSpec& s) {
  if (s.n == 6 && s.c == 3 && s.filter == EnumFilter::kNone) {
    return s.modulo_color_symmetry ? Count{268835} : Count{1601952};
  }
  return std::nullopt;
}

Outcome cmd_enumerate(const Options& o) {
  const EnumSpec spec = enum_spec(o);
  Outcome out;
  out.flags = enum_flags(o);
  out.flags["emit"] = o.emit.empty() ? Json(nullptr) : Json(o.emit);
  out.flags["emit_dir"] = o.emit_dir.empty() ? Json(nullptr) : Json(o.emit_dir);

  Count total = 0;
  if (o.emit.empty() && o.emit_dir.empty()) {
    total = count_classes(spec, o.jobs);
  } else {
    std::ofstream stream;
    if (!o.emit.empty()) {
      stream.open(o.emit, std::ios::binary);
      if (!stream) throw InputError("cannot write '" + o.emit + "'");
    }
    if (!o.emit_dir.empty()) std::filesystem::create_directories(o.emit_dir);
    enumerate(
        spec,
        [&](const SmallGraph& sg) {
          const std::string text = serialize_graph(sg.to_graph());
          if (stream.is_open()) stream << "# graph " << total << "\n" << text;
          if (!o.emit_dir.empty()) {
            write_text((std::filesystem::path(o.emit_dir) /
                        ("graph_" + std::to_string(total) + ".txt"))
                           .string(),
                       text);
          }
          ++total;
        },
        o.jobs);
    if (stream.is_open() && !stream.flush()) throw InputError("write failed for '" + o.emit + "'");
  }
  out.results["total"] = total;
  const auto ref = reference_count(spec);
  out.results["reference"] = ref ? Json(*ref) : Json(nullptr);
  out.results["matches_reference"] = ref ? Json(*ref == total) : Json(nullptr);
  out.results["alternative_interpretation"] = nullptr;
  std::string summary = "classes: " + std::to_string(total);
  if (ref && *ref != total) {
    // Report the count without the non-edge state next to ours.
    EnumSpec alt = spec;
    alt.filter = EnumFilter::kComplete;
    Json a;
    a["filter"] = to_string(alt.filter);
    a["total"] = count_classes(alt, o.jobs);
    out.results["alternative_interpretation"] = a;
    summary += " (MISMATCH with reference " + std::to_string(*ref) +
               "; complete-only count " + a["total"].dump() + ")";
  } else if (ref) {
    summary += " (matches reference)";
  }
  out.summary = summary;
  return out;
}

Outcome cmd_verify(const Options& o) {
  const EnumSpec spec = enum_spec(o);
  const VerificationReport rep = exhaustive_verify(spec, o.jobs);
  Outcome out;
  out.flags = enum_flags(o);
  Json& r = out.results;
  r["graphs_seen"] = rep.graphs_seen;
  Json counts = Json::object();
  Json examples = Json::object();
  for (const auto& [name, list] : rep.violations) {
    counts[name] = list.size();
    Json ex = Json::array();
    for (std::size_t i = 0; i < list.size() && i < 10; ++i) {
      ex.push_back(Json{{"graph", list[i].graph}, {"detail", list[i].detail}});
    }
    examples[name] = ex;
  }
  r["violation_counts"] = counts;
  r["violation_examples"] = examples;
  r["clean"] = rep.clean();
  Json tight = Json::array();
  for (const auto& t : rep.tight_cases) {
    Json jt;
    jt["graph"] = t.graph;
    jt["triangle_tight"] = t.triangle_tight;
    jt["k4_tight"] = t.k4_tight;
    jt["certified"] = t.certified;
    jt["d"] = t.d;
    jt["isolated"] = t.isolated;
    tight.push_back(jt);
  }
  r["tight_cases"] = tight;
  if (o.timing) r["graphs_per_second"] = rep.graphs_per_second;
  if (!rep.clean()) out.exit_code = kExitViolation;
  out.summary = "graphs: " + std::to_string(rep.graphs_seen) +
                "  violations: " + std::to_string(rep.violation_count()) +
                "  tight cases: " + std::to_string(rep.tight_cases.size());
  return out;
}

Outcome cmd_search(const Options& o) {
  SearchSpec spec;
  spec.n = o.n;
  spec.c = o.c;
  spec.objective = o.objective == "k4" ? SearchObjective::kRainbowK4
                                       : SearchObjective::kRainbowTriangle;
  spec.top_k = o.top;
  spec.seed = o.seed;
  spec.restarts = o.restarts;
  spec.max_steps = o.max_steps;
  spec.exhaustive_max_n = o.exhaustive_max_n;
  spec.budget = o.budget;
  spec.jobs = o.jobs;
  const SearchResult res = search_best_density(spec);

  Outcome out;
  out.flags["n"] = o.n;
  out.flags["c"] = o.c;
  out.flags["pattern"] = o.objective;
  out.flags["top"] = o.top;
  out.flags["restarts"] = o.restarts;
  out.flags["max_steps"] = o.max_steps;
  out.flags["exhaustive_max_n"] = o.exhaustive_max_n;
  out.flags["budget"] = o.budget;
  out.flags["jobs"] = o.jobs;
  const bool randomized = res.method != "exhaustive";
  out.seed = randomized ? Json(o.seed) : Json(nullptr);
  out.results["objective"] = to_string(spec.objective);
  out.results["method"] = res.method;
  out.results["evaluated"] = res.evaluated;
  Json best = Json::array();
  for (const auto& cand : res.best) {
    Json jc;
    jc["count"] = cand.count;
    jc["density"] = to_string(cand.density);
    jc["graph"] = serialize_graph(cand.coloring);
    best.push_back(jc);
  }
  out.results["best"] = best;
  out.summary = res.method + ": evaluated " + std::to_string(res.evaluated) +
                (res.best.empty() ? std::string()
                                  : ", best count " + std::to_string(res.best[0].count) +
                                        " density " + to_string(res.best[0].density));
  return out;
}

Outcome cmd_density(const Options& o) {
  const ColoredGraph g = load(o.file);
  if (g.vertex_count() < 1) throw UsageError("density needs at least one vertex");
  if (g.color_count() < 3) throw UsageError("density needs at least 3 colors");
  Outcome out;
  out.input = input_json(o.file, g);
  const DensityLimit lim = density_limits(g);
  Json edge = Json::array();
  for (Color x = 1; x <= g.color_count(); ++x) edge.push_back(to_string(lim.edge_density[x]));
  Json& r = out.results;
  r["blowup_limit"] = {{"edge_density", edge},
                       {"rainbow_triangle", to_string(lim.triangle)},
                       {"proper_k4", to_string(lim.proper_k4)}};
  const std::size_t k = static_cast<std::size_t>(g.vertex_count());
  const bool complete = g.edge_count() == k * (k - 1) / 2 && k >= 2;
  Json iter = nullptr;
  if (complete) {
    iter = Json::object();
    iter["rainbow_triangle"] =
        to_string(iterated_density(g, 3, count_rainbow_triangles(g)));
    iter["rainbow_k4"] = g.color_count() >= 6
                             ? Json(to_string(iterated_density(g, 4, count_rainbow_k4(g))))
                             : Json(nullptr);
  }
  r["iterated_blowup_limit"] = iter;
  out.summary = "triangle limit " + to_string(lim.triangle) + ", proper K4 limit " +
                to_string(lim.proper_k4) +
                (complete ? ", iterated rainbow triangle " +
                                iter["rainbow_triangle"].get<std::string>()
                          : std::string());
  return out;
}

Outcome cmd_construct(const Options& o) {
  ColoredGraph g;
  if (o.construction == "proper-k4") {
    g = make_proper_k4();
  } else if (o.construction == "k6-sum") {
    g = make_k6_sum_coloring();
  } else if (o.construction == "rainbow-k4") {
    g = make_rainbow_k4();
  } else {
    throw UsageError("unknown construction '" + o.construction + "'");
  }
  Outcome out;
  out.flags["name"] = o.construction;
  out.flags["output"] = o.output.empty() ? Json(nullptr) : Json(o.output);
  out.results["n"] = g.vertex_count();
  out.results["m"] = g.edge_count();
  out.results["c"] = g.color_count();
  out.summary = o.construction + ": n=" + std::to_string(g.vertex_count()) +
                " m=" + std::to_string(g.edge_count());
  const std::string text = serialize_graph(g);
  if (o.output.empty()) {
    out.raw_stdout = text;
  } else {
    write_text(o.output, text);
  }
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Counting bounds, extremal constructions and exhaustive checks for "
               "edge-colored graphs.",
               "rainbow"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  const auto common = [&](CLI::App* sub) {
    sub->add_flag("--timing", o.timing, "Include wall-clock time in the report");
    sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  };
  const auto file_arg = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Graph file")->required();
  };
  const auto enum_args = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Vertex count")->required()->check(CLI::Range(0, 10));
    sub->add_option("--c", o.c, "Color count")->capture_default_str()->check(CLI::Range(1, 15));
    sub->add_flag("--color-sym", o.color_sym, "Also identify graphs that differ by a color renaming");
    sub->add_option("--budget", o.budget, "Largest allowed estimated class count")
        ->capture_default_str();
  };

  auto* count = app.add_subcommand("count", "Edge, triangle, K4 and tuple counts");
  file_arg(count);
  common(count);

  auto* check = app.add_subcommand("check", "Check the counting bounds exactly");
  file_arg(check);
  common(check);
  check->add_option("--bound", o.bound, "Which bound")
      ->capture_default_str()
      ->check(CLI::IsMember({"all", "triangle", "k4", "fixed-rainbow", "conjecture", "injection"}));
  check->add_option("--pattern", o.pattern_file, "Rainbow K4 pattern file for fixed-rainbow");

  auto* recognize = app.add_subcommand("recognize", "Recognize balanced blowups of a proper K4");
  file_arg(recognize);
  common(recognize);

  auto* blow = app.add_subcommand("blowup", "Blow up every vertex into an independent set");
  file_arg(blow);
  common(blow);
  blow->add_option("--uniform", o.uniform, "Part size for every vertex")->check(CLI::Range(0, 1 << 20));
  blow->add_option("--sizes", o.sizes, "Comma separated part sizes")->delimiter(',');
  blow->add_option("--depth", o.depth, "Nesting depth (uniform only)")->capture_default_str()->check(CLI::Range(1, 64));
  blow->add_option("-o,--output", o.output, "Write the graph here; the report goes to stdout");

  auto* en = app.add_subcommand("enumerate", "Count or list graphs up to isomorphism");
  common(en);
  enum_args(en);
  en->add_flag("--complete", o.complete, "Only colorings of the complete graph");
  en->add_option("--emit", o.emit, "Write all representatives to one file");
  en->add_option("--emit-dir", o.emit_dir, "Write one file per representative");

  auto* verify = app.add_subcommand("verify", "Check every bound on every graph up to isomorphism");
  common(verify);
  enum_args(verify);

  auto* search = app.add_subcommand("search", "Best complete colorings for iterated blowups");
  common(search);
  search->add_option("--n", o.n, "Vertex count")->required()->check(CLI::Range(2, 64));
  search->add_option("--c", o.c, "Color count")->capture_default_str()->check(CLI::Range(3, 15));
  search->add_option("--pattern", o.objective, "Objective pattern")
      ->capture_default_str()
      ->check(CLI::IsMember({"triangle", "k4"}));
  search->add_option("--top", o.top, "Candidates to keep")->capture_default_str()->check(CLI::Range(1, 1000));
  search->add_option("--seed", o.seed, "Seed for randomized search")->capture_default_str();
  search->add_option("--restarts", o.restarts, "Random restarts")->capture_default_str()->check(CLI::Range(1, 1000000));
  search->add_option("--max-steps", o.max_steps, "Ascent steps per restart")->capture_default_str()->check(CLI::Range(1, 100000000));
  search->add_option("--exhaustive-max-n", o.exhaustive_max_n, "Largest n searched exhaustively")
      ->capture_default_str()
      ->check(CLI::Range(0, 10));
  search->add_option("--budget", o.budget, "Largest allowed estimated class count")->capture_default_str();

  auto* density = app.add_subcommand("density", "Limiting densities of blowups");
  file_arg(density);
  common(density);

  auto* construct = app.add_subcommand("construct", "Write a named construction");
  common(construct);
  construct->add_option("name", o.construction, "proper-k4, k6-sum or rainbow-k4")
      ->required()
      ->check(CLI::IsMember({"proper-k4", "k6-sum", "rainbow-k4"}));
  construct->add_option("-o,--output", o.output, "Write the graph here; the report goes to stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  const auto start = std::chrono::steady_clock::now();
  Outcome result;
  try {
    if (sub == count) result = cmd_count(o);
    else if (sub == check) result = cmd_check(o);
    else if (sub == recognize) result = cmd_recognize(o);
    else if (sub == blow) result = cmd_blowup(o);
    else if (sub == en) result = cmd_enumerate(o);
    else if (sub == verify) result = cmd_verify(o);
    else if (sub == search) result = cmd_search(o);
    else if (sub == density) result = cmd_density(o);
    else result = cmd_construct(o);
  } catch (const std::exception& e) {
    // Bad input of any kind, including budgets and graphs the command cannot take.
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (!result.summary.empty()) err << result.summary << "\n";
  if (result.raw_stdout) {
    out << *result.raw_stdout;
    return result.exit_code;
  }
  Json report;
  report["schema_version"] = kSchemaVersion;
  report["tool_version"] = kToolVersion;
  report["command"] = command;
  report["input"] = result.input;
  if (!result.flags.contains("jobs")) result.flags["jobs"] = o.jobs;
  result.flags["timing"] = o.timing;
  report["flags"] = result.flags;
  report["seed"] = result.seed;
  report["results"] = result.results;
  if (o.timing) report["timing"] = {{"seconds", seconds}};
  out << report.dump(2) << "\n";
  return result.exit_code;
}

}  // namespace rainbow::cli
