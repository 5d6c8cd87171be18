#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "rainbow/cli.hpp"
#include "rainbow/graph_io.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;

  json report() const { return json::parse(out); }
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "rainbow");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  CliRun r;
  r.code = rainbow::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) { return std::string(RAINBOW_DATA_DIR) + "/" + name; }

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("rainbow_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

}  // namespace

TEST(Cli, CountProperK4) {
  const CliRun r = run({"count", data("proper_k4.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = r.report();
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["command"], "count");
  EXPECT_EQ(j["input"]["n"], 4);
  EXPECT_EQ(j["input"]["m"], 6);
  EXPECT_EQ(j["results"]["R"], 2);
  EXPECT_EQ(j["results"]["G"], 2);
  EXPECT_EQ(j["results"]["B"], 2);
  EXPECT_EQ(j["results"]["T"], 4);
  EXPECT_EQ(j["results"]["K"], 1);
  EXPECT_EQ(j["results"]["S"], 4);
  EXPECT_EQ(j["results"]["S_prime"], 4);
  EXPECT_TRUE(j["results"]["rainbow_k4"].is_null());
  EXPECT_TRUE(j["seed"].is_null());
  EXPECT_FALSE(j.contains("timing"));
}

TEST(Cli, CountSixColors) {
  const CliRun r = run({"count", data("k6_z6.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.report()["results"]["rainbow_k4"], 6);
}

TEST(Cli, CountEmptyGraph) {
  TempDir dir;
  const CliRun r = run({"count", dir.write("empty.txt", "0 0 3\n")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json res = r.report()["results"];
  for (const char* key : {"R", "G", "B", "T", "K", "S", "S_prime", "edges"}) EXPECT_EQ(res[key], 0) << key;
}

TEST(Cli, CheckTriangleTight) {
  const CliRun r = run({"check", "--bound", "triangle", data("proper_k4.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json b = r.report()["results"]["bounds"];
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0]["bound"], "TRIANGLE");
  EXPECT_EQ(b[0]["lhs"], "16");
  EXPECT_EQ(b[0]["rhs"], "16");
  EXPECT_EQ(b[0]["tight"], true);
}

TEST(Cli, BlowupThenCheckK4) {
  TempDir dir;
  const std::string out = dir.file("b2.txt");
  const CliRun b = run({"blowup", "--uniform", "2", "-o", out, data("proper_k4.txt")});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(b.report()["results"]["n"], 8);
  const CliRun r = run({"check", "--bound", "k4", out});
  ASSERT_EQ(r.code, 0) << r.err;
  const json bounds = r.report()["results"]["bounds"];
  ASSERT_EQ(bounds.size(), 2u);
  EXPECT_EQ(bounds[0]["bound"], "K4_MIN");
  EXPECT_EQ(bounds[0]["lhs"], "64");
  EXPECT_EQ(bounds[0]["rhs"], "64");
  EXPECT_EQ(bounds[1]["bound"], "K4_GEOM");
  EXPECT_EQ(bounds[1]["tight"], true);
}

TEST(Cli, BlowupWithoutOutputPrintsGraph) {
  const CliRun r = run({"blowup", "--uniform", "2", data("proper_k4.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  const rainbow::ColoredGraph g = rainbow::parse_graph(r.out);
  EXPECT_EQ(g.vertex_count(), 8);
  EXPECT_EQ(g.edge_count(), 24u);
}

TEST(Cli, ConjectureIsFlagged) {
  const CliRun r = run({"check", "--bound", "conjecture", data("k6_z6.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = r.report()["results"];
  EXPECT_EQ(j["bounds"][0]["bound"], "RAINBOW_K4_CONJ");
  EXPECT_EQ(j["bounds"][0]["conjecture"], true);
  EXPECT_EQ(j["bounds"][0]["lhs"], "216");
  EXPECT_EQ(j["bounds"][0]["tight"], true);
  EXPECT_EQ(j["conjecture_failed"], false);
}

TEST(Cli, CheckAllOnSixColors) {
  const CliRun r = run({"check", data("k6_fig2a.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = r.report()["results"];
  EXPECT_EQ(j["proven_bounds_hold"], true);
  EXPECT_TRUE(j["injection"].is_object());
}

TEST(Cli, CheckNeedsColors) {
  const CliRun r = run({"check", "--bound", "conjecture", data("proper_k4.txt")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST(Cli, RecognizeCertified) {
  const CliRun r = run({"recognize", data("proper_k4.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = r.report()["results"];
  EXPECT_EQ(j["verdict"], "CERTIFIED");
  EXPECT_EQ(j["d"], 1);
  EXPECT_EQ(j["parts"]["V_0"], json::array({0}));
}

TEST(Cli, RecognizeViolationListsWitness) {
  TempDir dir;
  const CliRun r = run({"recognize", dir.write("path.txt", "3 2 3\n0 1 1\n1 2 2\n")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = r.report()["results"];
  EXPECT_EQ(j["verdict"], "VIOLATION");
  EXPECT_EQ(j["violation"]["condition"], "A");
  EXPECT_EQ(j["violation"]["edge_pair"].size(), 2u);
}

TEST(Cli, EnumerateAndVerify) {
  const CliRun e = run({"enumerate", "--n", "4", "--c", "3"});
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_EQ(e.report()["results"]["total"], 276);
  EXPECT_TRUE(e.report()["results"]["reference"].is_null());

  const CliRun v = run({"verify", "--n", "5", "--jobs", "2"});
  ASSERT_EQ(v.code, 0) << v.err;
  const json j = v.report()["results"];
  EXPECT_EQ(j["graphs_seen"], 10688);
  EXPECT_EQ(j["clean"], true);
  for (const auto& [name, count] : j["violation_counts"].items()) EXPECT_EQ(count, 0) << name;
}

TEST(Cli, EnumerateEmitsParsableGraphs) {
  TempDir dir;
  const CliRun e = run({"enumerate", "--n", "3", "--c", "3", "--color-sym", "--emit-dir", dir.file("reps")});
  ASSERT_EQ(e.code, 0) << e.err;
  int files = 0;
  for (const auto& entry : fs::directory_iterator(dir.file("reps"))) {
    std::ifstream in(entry.path());
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT_EQ(rainbow::parse_graph(buf.str()).vertex_count(), 3);
    ++files;
  }
  EXPECT_EQ(files, 7);
}

TEST(Cli, SearchAndDensity) {
  const CliRun s = run({"search", "--n", "4", "--c", "6", "--pattern", "k4"});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(s.report()["results"]["best"][0]["density"], "2/21");
  EXPECT_EQ(s.report()["results"]["method"], "exhaustive");

  const CliRun d = run({"density", data("k6_z6.txt")});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_EQ(d.report()["results"]["iterated_blowup_limit"]["rainbow_k4"], "24/215");
  const CliRun p = run({"density", data("proper_k4.txt")});
  EXPECT_EQ(p.report()["results"]["iterated_blowup_limit"]["rainbow_triangle"], "2/5");
}

TEST(Cli, HillClimbingReportsSeed) {
  const CliRun s = run({"search", "--n", "7", "--pattern", "triangle", "--exhaustive-max-n", "4",
                     "--restarts", "3", "--seed", "9"});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(s.report()["seed"], 9);
  EXPECT_EQ(s.report()["results"]["method"], "hill-climbing");
  EXPECT_EQ(run({"search", "--n", "7", "--pattern", "triangle", "--exhaustive-max-n", "4",
                 "--restarts", "3", "--seed", "9"})
                .out,
            s.out);
}

TEST(Cli, ConstructRoundTrip) {
  const CliRun r = run({"construct", "k6-sum"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(data("k6_z6.txt"));
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(rainbow::parse_graph(r.out), rainbow::parse_graph(buf.str()));
}

TEST(Cli, TimingOnlyWhenAsked) {
  const CliRun r = run({"count", "--timing", data("proper_k4.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.report().contains("timing"));
  EXPECT_EQ(r.report()["flags"]["timing"], true);
}

TEST(Cli, ReportsAreDeterministic) {
  EXPECT_EQ(run({"count", data("k6_fig2a.txt")}).out, run({"count", data("k6_fig2a.txt")}).out);
  EXPECT_EQ(run({"enumerate", "--n", "4", "--jobs", "3"}).out,
            run({"enumerate", "--n", "4", "--jobs", "3"}).out);
}

TEST(Cli, SchemaKeyOrder) {
  const json j = json::parse(run({"count", data("proper_k4.txt")}).out);
  std::vector<std::string> keys;
  const auto ordered = nlohmann::ordered_json::parse(run({"count", data("proper_k4.txt")}).out);
  for (const auto& [k, v] : ordered.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"schema_version", "tool_version", "command", "input",
                                            "flags", "seed", "results"}));
  EXPECT_EQ(j["tool_version"], rainbow::cli::kToolVersion);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"count"}).code, 1);
  EXPECT_EQ(run({"count", "/nonexistent/graph.txt"}).code, 1);
  EXPECT_EQ(run({"enumerate", "--n", "11"}).code, 1);
  EXPECT_EQ(run({"enumerate", "--n", "7"}).code, 1);  // over budget
  EXPECT_EQ(run({"check", "--bound", "bogus", data("proper_k4.txt")}).code, 1);
  TempDir dir;
  const CliRun bad = run({"count", dir.write("bad.txt", "3 1 3\n0 1 7\n")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos) << bad.err;
}
