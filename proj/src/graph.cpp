#include "sgc/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sgc {

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) {
  std::vector<Edge> norm;
  norm.reserve(edges.size());
  for (auto [a, b] : edges) norm.push_back({a, b});
  build(n, std::move(norm));
}

Graph::Graph(int n, std::span<const Edge> edges) { build(n, {edges.begin(), edges.end()}); }

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges)
    : Graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

void Graph::build(int n, std::vector<Edge> edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ") with n=" + std::to_string(n));
    }
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    e = make_edge(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  n_ = n;
  edges_ = std::move(edges);
  adj_.assign(static_cast<std::size_t>(n), {});
  for (const auto& e : edges_) {
    adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());

  masks_.clear();
  if (n <= kMaxMaskOrder) {
    masks_.assign(static_cast<std::size_t>(n), 0);
    for (const auto& e : edges_) {
      masks_[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
      masks_[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
    }
  }
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (a == b) return false;
  if (!masks_.empty()) return (masks_[static_cast<std::size_t>(a)] >> b) & 1U;
  const auto& list = neighbors(a);
  return std::binary_search(list.begin(), list.end(), b);
}

std::uint64_t Graph::vertex_mask() const {
  return n_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

void require_mask_order(const Graph& g, const char* who) {
  if (g.order() > kMaxMaskOrder) {
    throw std::invalid_argument(std::string(who) + ": exact search supports at most 64 vertices");
  }
}

namespace {

std::vector<char> reach_from(const Graph& g, Vertex start, const std::vector<char>& blocked) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> stack{start};
  seen[static_cast<std::size_t>(start)] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      auto wi = static_cast<std::size_t>(w);
      if (!seen[wi] && !blocked[wi]) {
        seen[wi] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  std::vector<char> blocked(static_cast<std::size_t>(g.order()), 0);
  auto seen = reach_from(g, 0, blocked);
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool is_connected_without(const Graph& g, std::span<const Vertex> removed) {
  std::vector<char> blocked(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : removed) blocked[static_cast<std::size_t>(v)] = 1;
  Vertex start = -1;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!blocked[static_cast<std::size_t>(v)]) {
      start = v;
      break;
    }
  }
  if (start < 0) return false;
  auto seen = reach_from(g, start, blocked);
  for (Vertex v = 0; v < g.order(); ++v) {
    auto vi = static_cast<std::size_t>(v);
    if (!blocked[vi] && !seen[vi]) return false;
  }
  return true;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (colour[static_cast<std::size_t>(root)] >= 0) continue;
    colour[static_cast<std::size_t>(root)] = 0;
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        auto& cw = colour[static_cast<std::size_t>(w)];
        int cv = colour[static_cast<std::size_t>(v)];
        if (cw < 0) {
          cw = 1 - cv;
          stack.push_back(w);
        } else if (cw == cv) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (Vertex v = 0; v < g.order(); ++v) {
    (colour[static_cast<std::size_t>(v)] == 0 ? parts.side_a : parts.side_b).push_back(v);
  }
  return parts;
}

bool is_well_formed(const Graph& g) {
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (e.u < 0 || e.v >= g.order() || e.u >= e.v) return false;
    if (i > 0 && !(edges[i - 1] < e)) return false;
  }
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w : g.neighbors(v)) {
      if (w == v || !g.adjacent(w, v)) return false;
    }
    degree_sum += g.neighbors(v).size();
  }
  return degree_sum == 2 * edges.size();
}

}  // namespace sgc
