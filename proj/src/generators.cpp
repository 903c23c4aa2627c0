#include "sgc/generators.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace sgc {

BipartiteGraph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: both sides must be non-empty");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(a) * static_cast<std::size_t>(b));
  BipartiteGraph out;
  for (Vertex i = 0; i < a; ++i) out.parts.side_a.push_back(i);
  for (Vertex j = a; j < a + b; ++j) out.parts.side_b.push_back(j);
  for (Vertex i = 0; i < a; ++i) {
    for (Vertex j = a; j < a + b; ++j) edges.push_back({i, j});
  }
  out.graph = Graph(a + b, edges);
  return out;
}

Graph standard_graph(StandardKind kind, int n) {
  if (n < 1) throw std::invalid_argument("standard_graph: n must be at least 1");
  std::vector<Edge> edges;
  switch (kind) {
    case StandardKind::path:
      for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
      break;
    case StandardKind::cycle:
      if (n < 3) throw std::invalid_argument("standard_graph: a cycle needs at least 3 vertices");
      for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
      edges.push_back({0, n - 1});
      break;
    case StandardKind::complete:
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
      }
      break;
  }
  return Graph(n, edges);
}

Graph wheel_graph(int rim) {
  if (rim < 3) throw std::invalid_argument("wheel_graph: rim must have at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= rim; ++v) {
    edges.push_back({0, v});
    edges.push_back(make_edge(v, v == rim ? 1 : v + 1));
  }
  return Graph(rim + 1, edges);
}

Graph random_connected(int n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_connected: n must be at least 1");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("random_connected: p must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  // 53-bit uniform draw; bernoulli_distribution is not specified bit-exactly
  // across standard libraries.
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  for (int attempt = 0; attempt < kRandomConnectedAttempts; ++attempt) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (uniform() < p) edges.push_back({u, v});
      }
    }
    Graph g(n, edges);
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("random_connected: no connected sample after " +
                           std::to_string(kRandomConnectedAttempts) + " attempts (p too small for n)");
}

}  // namespace sgc
