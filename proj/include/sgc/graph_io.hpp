#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sgc/graph.hpp"

namespace sgc {

/// Malformed graph text. `line` is 1-based, or 0 when the input was a single
/// string with no line context.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// graph6, short header only (n <= 62). Throws ParseError.
Graph parse_graph6(std::string_view text);
/// Throws std::invalid_argument for n > 62.
std::string emit_graph6(const Graph& g);

enum class GraphFormat { graph6, edgelist };

/// One graph6 per non-empty line.
std::vector<Graph> read_graph6_stream(std::istream& in);

/// Blocks of "n m" followed by m lines "u v". Blank lines and lines starting
/// with '#' are ignored.
std::vector<Graph> read_edgelist_stream(std::istream& in);
std::string emit_edgelist(const Graph& g);

std::vector<Graph> read_graphs(std::istream& in, GraphFormat format);
std::vector<Graph> read_graph_file(const std::string& path, GraphFormat format);

}  // namespace sgc
