#include "sgc/graph_io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace sgc {

namespace {

constexpr int kMaxShortOrder = 62;

std::string trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

Graph parse_graph6_line(std::string_view text, std::size_t line) {
  if (text.empty()) throw ParseError("empty graph6 string", line);
  for (char c : text) {
    if (c < 63 || c > 126) throw ParseError("graph6 character out of range", line);
  }
  int n = text[0] - 63;
  if (n > kMaxShortOrder) throw ParseError("long-form graph6 header is not supported", line);

  std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  std::size_t expected = 1 + (bits + 5) / 6;
  if (text.size() != expected) {
    throw ParseError("graph6 length mismatch: expected " + std::to_string(expected) + " bytes, got " +
                         std::to_string(text.size()),
                     line);
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = text[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  for (; k % 6 != 0; ++k) {
    int byte = text[1 + k / 6] - 63;
    if ((byte >> (5 - k % 6)) & 1) throw ParseError("graph6 padding bits are not zero", line);
  }
  return Graph(n, edges);
}

}  // namespace

Graph parse_graph6(std::string_view text) { return parse_graph6_line(text, 0); }

std::string emit_graph6(const Graph& g) {
  int n = g.order();
  if (n > kMaxShortOrder) throw std::invalid_argument("graph6 long form (n > 62) is not supported");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> graphs;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto text = trim(raw);
    if (text.empty()) continue;
    if (text.rfind(">>graph6<<", 0) == 0) text = text.substr(10);
    graphs.push_back(parse_graph6_line(text, line));
  }
  return graphs;
}

std::vector<Graph> read_edgelist_stream(std::istream& in) {
  std::vector<Graph> graphs;
  std::string raw;
  std::size_t line = 0;

  auto next_line = [&](std::string& out) {
    while (std::getline(in, raw)) {
      ++line;
      out = trim(raw);
      if (!out.empty() && out[0] != '#') return true;
    }
    return false;
  };

  std::string text;
  while (next_line(text)) {
    std::istringstream header(text);
    long n = -1, m = -1;
    if (!(header >> n >> m) || n < 0 || m < 0) throw ParseError("expected header \"n m\"", line);
    std::vector<std::pair<int, int>> edges;
    for (long i = 0; i < m; ++i) {
      if (!next_line(text)) throw ParseError("unexpected end of input inside edge list", line);
      std::istringstream row(text);
      int u = 0, v = 0;
      if (!(row >> u >> v)) throw ParseError("expected edge \"u v\"", line);
      edges.emplace_back(u, v);
    }
    try {
      graphs.emplace_back(static_cast<int>(n), edges);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line);
    }
  }
  return graphs;
}

std::string emit_edgelist(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::vector<Graph> read_graphs(std::istream& in, GraphFormat format) {
  return format == GraphFormat::graph6 ? read_graph6_stream(in) : read_edgelist_stream(in);
}

std::vector<Graph> read_graph_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graphs(in, format);
}

}  // namespace sgc
