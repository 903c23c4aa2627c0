#pragma once

// Brute-force reference implementations. They share nothing with the library
// beyond the Graph container and are only meant for graphs with a handful of
// vertices.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "sgc/graph.hpp"
#include "sgc/tree.hpp"

namespace oracle {

using sgc::Edge;
using sgc::Graph;
using sgc::Vertex;

inline bool has(std::uint32_t set, int v) { return (set >> v) & 1U; }

inline bool connected_within(const Graph& g, std::uint32_t set) {
  if (set == 0) return false;
  std::uint32_t seen = set & (~set + 1);
  for (bool grew = true; grew;) {
    grew = false;
    for (int v = 0; v < g.order(); ++v) {
      if (!has(seen, v)) continue;
      for (Vertex w : g.neighbors(v)) {
        if (has(set, w) && !has(seen, w)) {
          seen |= 1U << w;
          grew = true;
        }
      }
    }
  }
  return seen == set;
}

inline int alpha(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    bool ok = true;
    for (const auto& e : g.edges()) ok = ok && !(has(s, e.u) && has(s, e.v));
    if (ok) best = std::max(best, std::popcount(s));
  }
  return best;
}

/// Smallest set whose removal leaves at least two vertices in more than one
/// component; n - 1 when no such set exists.
inline int kappa(const Graph& g) {
  const int n = g.order();
  const std::uint32_t all = (1U << n) - 1;
  if (n <= 1) return 0;
  if (!connected_within(g, all)) return 0;
  int best = n - 1;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    const std::uint32_t rest = all & ~s;
    if (std::popcount(rest) >= 2 && !connected_within(g, rest)) best = std::min(best, std::popcount(s));
  }
  return best;
}

inline bool is_spanning_tree(int n, const std::vector<Edge>& edges) {
  if (static_cast<int>(edges.size()) != n - 1) return false;
  std::vector<int> comp(static_cast<std::size_t>(n));
  std::iota(comp.begin(), comp.end(), 0);
  for (const auto& e : edges) {
    int a = comp[static_cast<std::size_t>(e.u)], b = comp[static_cast<std::size_t>(e.v)];
    if (a == b) return false;
    for (auto& c : comp) {
      if (c == b) c = a;
    }
  }
  return true;
}

/// Every (n-1)-subset of the edges that forms a tree.
inline std::vector<std::vector<Edge>> spanning_trees(const Graph& g) {
  std::vector<std::vector<Edge>> out;
  const auto& edges = g.edges();
  const int n = g.order();
  if (n == 1) return {{}};
  const int m = static_cast<int>(edges.size());
  if (m < n - 1) return out;
  std::vector<int> pick(static_cast<std::size_t>(n - 1));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<Edge> chosen;
    for (int i : pick) chosen.push_back(edges[static_cast<std::size_t>(i)]);
    if (is_spanning_tree(n, chosen)) out.push_back(chosen);
    int i = n - 2;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - (n - 1) + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n - 1; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

inline std::vector<int> degrees(int n, const std::vector<Edge>& edges) {
  std::vector<int> d(static_cast<std::size_t>(n), 0);
  for (const auto& e : edges) {
    ++d[static_cast<std::size_t>(e.u)];
    ++d[static_cast<std::size_t>(e.v)];
  }
  return d;
}

inline int branch_count(int n, const std::vector<Edge>& edges) {
  auto d = degrees(n, edges);
  return static_cast<int>(std::count_if(d.begin(), d.end(), [](int x) { return x >= 3; }));
}

/// Vertex sequence of the tree path between a and b.
inline std::vector<Vertex> tree_path(int n, const std::vector<Edge>& edges, Vertex a, Vertex b) {
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> stack{a};
  parent[static_cast<std::size_t>(a)] = a;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (const auto& e : edges) {
      Vertex w = e.u == v ? e.v : e.v == v ? e.u : -1;
      if (w >= 0 && parent[static_cast<std::size_t>(w)] < 0) {
        parent[static_cast<std::size_t>(w)] = v;
        stack.push_back(w);
      }
    }
  }
  std::vector<Vertex> path{b};
  while (path.back() != a) path.push_back(parent[static_cast<std::size_t>(path.back())]);
  return path;
}

/// Some tree path contains every branch vertex.
inline bool is_generalized_caterpillar(int n, const std::vector<Edge>& edges) {
  auto d = degrees(n, edges);
  std::vector<Vertex> branch;
  for (Vertex v = 0; v < n; ++v) {
    if (d[static_cast<std::size_t>(v)] >= 3) branch.push_back(v);
  }
  if (branch.size() <= 1) return true;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      auto p = tree_path(n, edges, a, b);
      bool all = std::all_of(branch.begin(), branch.end(),
                             [&](Vertex x) { return std::find(p.begin(), p.end(), x) != p.end(); });
      if (all) return true;
    }
  }
  return false;
}

/// Minimum branch count over spanning trees; -1 for disconnected graphs.
inline int min_branch(const Graph& g) {
  int best = -1;
  for (const auto& t : spanning_trees(g)) {
    int b = branch_count(g.order(), t);
    if (best < 0 || b < best) best = b;
  }
  return best;
}

inline bool has_sgc(const Graph& g) {
  for (const auto& t : spanning_trees(g)) {
    if (is_generalized_caterpillar(g.order(), t)) return true;
  }
  return false;
}

/// Fewest breaks over all vertex orders, plus one.
inline int path_cover_number(const Graph& g) {
  std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  int best = g.order();
  do {
    int paths = 1;
    for (std::size_t i = 1; i < perm.size(); ++i) paths += g.adjacent(perm[i - 1], perm[i]) ? 0 : 1;
    best = std::min(best, paths);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// True when G[set] is a single vertex, an edge, or has a Hamiltonian cycle.
inline bool cyclable(const Graph& g, std::uint32_t set) {
  std::vector<Vertex> vs;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (has(set, v)) vs.push_back(v);
  }
  if (vs.size() == 1) return true;
  if (vs.size() == 2) return g.adjacent(vs[0], vs[1]);
  // Fix the first vertex to cut rotations.
  do {
    bool ok = true;
    for (std::size_t i = 0; i < vs.size() && ok; ++i) ok = g.adjacent(vs[i], vs[(i + 1) % vs.size()]);
    if (ok) return true;
  } while (std::next_permutation(vs.begin() + 1, vs.end()));
  return false;
}

/// Fewest cyclable sets whose union is V.
inline int cycle_cover_number(const Graph& g) {
  const int n = g.order();
  const std::uint32_t all = (1U << n) - 1;
  std::vector<std::uint32_t> sets;
  for (std::uint32_t s = 1; s <= all; ++s) {
    if (cyclable(g, s)) sets.push_back(s);
  }
  std::vector<int> dist(all + 1, -1);
  dist[0] = 0;
  std::vector<std::uint32_t> frontier{0};
  while (dist[all] < 0) {
    std::vector<std::uint32_t> next;
    for (auto u : frontier) {
      for (auto s : sets) {
        if (dist[u | s] < 0) {
          dist[u | s] = dist[u] + 1;
          next.push_back(u | s);
        }
      }
    }
    frontier = std::move(next);
  }
  return dist[all];
}

inline bool has_hamiltonian_path(const Graph& g) { return path_cover_number(g) == 1; }

/// Some cycle (length >= 3) of g contains every vertex of `required`.
inline bool cycle_through_exists(const Graph& g, const std::vector<Vertex>& required) {
  std::uint32_t need = 0;
  for (Vertex v : required) need |= 1U << v;
  const std::uint32_t all = (1U << g.order()) - 1;
  for (std::uint32_t s = need; s <= all; ++s) {
    if ((s & need) == need && std::popcount(s) >= 3 && cyclable(g, s)) return true;
  }
  return false;
}

/// Number of spanning trees by the matrix-tree theorem (fraction-free
/// elimination on the reduced Laplacian).
inline long long kirchhoff(const Graph& g) {
  const int n = g.order() - 1;
  if (n <= 0) return 1;
  std::vector<std::vector<long long>> a(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
  for (const auto& e : g.edges()) {
    auto put = [&](int i, int j, long long v) {
      if (i < n && j < n) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += v;
    };
    put(e.u, e.u, 1);
    put(e.v, e.v, 1);
    put(e.u, e.v, -1);
    put(e.v, e.u, -1);
  }
  long long prev = 1;
  long long sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    auto& rows = a;
    if (rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
      int swap = -1;
      for (int r = k + 1; r < n && swap < 0; ++r) {
        if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] != 0) swap = r;
      }
      if (swap < 0) return 0;
      std::swap(rows[static_cast<std::size_t>(k)], rows[static_cast<std::size_t>(swap)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        auto& x = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        x = (x * rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
             rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) /
            prev;
      }
    }
    prev = rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
  }
  return sign * a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
}

/// Every labeled connected graph on exactly n vertices.
inline std::vector<Graph> connected_graphs(int n) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (has(mask, static_cast<int>(k))) edges.push_back(pairs[k]);
    }
    Graph g(n, edges);
    if (connected_within(g, (1U << n) - 1)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace oracle
