#ifndef RAINBOW_GRAPH_IO_HPP
#define RAINBOW_GRAPH_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/colored_graph.hpp"

namespace rainbow {

/// Malformed graph text. `line()` is 1-based; 0 means end of input.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// Text format:
//
//   n m c          header: vertex count, edge count, color count
//   u v x          m lines, 0-based endpoints, color x in [1, c]
//
// Tokens are whitespace separated, lines LF terminated. Lines starting with
// '#' are comments and blank lines are ignored.

/// Parses exactly one graph. Trailing non-comment lines are an error.
ColoredGraph parse_graph(std::string_view text);

/// Parses a concatenation of graphs (as written by serialize_graphs).
std::vector<ColoredGraph> parse_graphs(std::string_view text);

/// Canonical text: header, then edges sorted by (min endpoint, max endpoint)
/// with the smaller endpoint first.
std::string serialize_graph(const ColoredGraph& g);

/// Graphs separated by "# graph <index>" comment lines.
std::string serialize_graphs(const std::vector<ColoredGraph>& graphs);

ColoredGraph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const ColoredGraph& g);

}  // namespace rainbow

#endif  // RAINBOW_GRAPH_IO_HPP
