#include "rainbow/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace rainbow {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " +
                                        message
                                  : "end of input: " + message),
      line_(line) {}

namespace {

struct Line {
  int number = 0;
  std::string_view text;
};

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next line that is neither blank nor a comment.
  bool next(Line* out) {
    while (pos_ < text_.size()) {
      auto end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++number_;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string_view::npos || line[first] == '#') continue;
      *out = {number_, line};
      return true;
    }
    return false;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int number_ = 0;
};

std::vector<long long> tokens(const Line& line) {
  std::vector<long long> out;
  std::size_t i = 0;
  const auto& s = line.text;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i >= s.size()) break;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + j, value);
    if (ec != std::errc() || ptr != s.data() + j) {
      throw ParseError(line.number,
                       "not an integer: '" + std::string(s.substr(i, j - i)) +
                           "'");
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

// Reads one graph starting at the next content line. Returns false if the
// input is exhausted before a header.
bool read_one(LineReader& reader, ColoredGraph* out) {
  Line header;
  if (!reader.next(&header)) return false;
  const auto h = tokens(header);
  if (h.size() != 3) {
    throw ParseError(header.number, "header must be 'n m c'");
  }
  const long long n = h[0], m = h[1], c = h[2];
  if (n < 0 || n > 16384) {
    throw ParseError(header.number, "vertex count out of range");
  }
  if (c < 1 || c > kMaxColors) {
    throw ParseError(header.number, "color count must be in [1, 255]");
  }
  if (m < 0 || m > n * (n - 1) / 2) {
    throw ParseError(header.number, "edge count out of range");
  }
  ColoredGraph g(static_cast<int>(n), static_cast<int>(c));
  for (long long k = 0; k < m; ++k) {
    Line line;
    if (!reader.next(&line)) {
      throw ParseError(0, "expected " + std::to_string(m) + " edges, got " +
                              std::to_string(k));
    }
    const auto t = tokens(line);
    if (t.size() != 3) throw ParseError(line.number, "edge must be 'u v x'");
    const long long u = t[0], v = t[1], x = t[2];
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError(line.number, "vertex out of range");
    }
    if (u == v) {
      throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
    }
    if (x < 1 || x > c) {
      throw ParseError(line.number, "color " + std::to_string(x) +
                                        " outside [1, " + std::to_string(c) +
                                        "]");
    }
    const auto ui = static_cast<Vertex>(u), vi = static_cast<Vertex>(v);
    if (g.has_edge(ui, vi)) {
      throw ParseError(line.number, "duplicate pair {" + std::to_string(u) +
                                        "," + std::to_string(v) + "}");
    }
    g.set_color(ui, vi, static_cast<Color>(x));
  }
  *out = std::move(g);
  return true;
}

}  // namespace

ColoredGraph parse_graph(std::string_view text) {
  LineReader reader(text);
  ColoredGraph g;
  if (!read_one(reader, &g)) throw ParseError(0, "missing header");
  Line extra;
  if (reader.next(&extra)) throw ParseError(extra.number, "trailing data");
  return g;
}

std::vector<ColoredGraph> parse_graphs(std::string_view text) {
  LineReader reader(text);
  std::vector<ColoredGraph> out;
  ColoredGraph g;
  while (read_one(reader, &g)) out.push_back(std::move(g));
  return out;
}

std::string serialize_graph(const ColoredGraph& g) {
  std::string out;
  const auto edges = g.edges();
  out += std::to_string(g.vertex_count()) + ' ' + std::to_string(edges.size()) +
         ' ' + std::to_string(g.color_count()) + '\n';
  for (const Edge& e : edges) {
    out += std::to_string(e.u) + ' ' + std::to_string(e.v) + ' ' +
           std::to_string(e.color) + '\n';
  }
  return out;
}

std::string serialize_graphs(const std::vector<ColoredGraph>& graphs) {
  std::string out;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    out += "# graph " + std::to_string(i) + '\n';
    out += serialize_graph(graphs[i]);
  }
  return out;
}

ColoredGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

void write_graph_file(const std::filesystem::path& path,
                      const ColoredGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize_graph(g);
}

}  // namespace rainbow
