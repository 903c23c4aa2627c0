#include "sgc/tree.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace sgc {

std::vector<int> SpanningTree::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(order), 0);
  for (const auto& e : edges) {
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  return deg;
}

std::vector<std::vector<Vertex>> SpanningTree::adjacency() const {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(order));
  for (const auto& e : edges) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

int SpanningTree::max_degree() const {
  auto deg = degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

SpanningTree make_tree(int order, std::vector<Edge> edges) {
  for (auto& e : edges) e = make_edge(e.u, e.v);
  std::sort(edges.begin(), edges.end());
  return {order, std::move(edges)};
}

namespace {

struct Dsu {
  explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
  std::vector<int> parent;
};

/// Orders the vertices of a path-shaped subgraph (every degree <= 2, one
/// component), starting from its smallest-labelled end.
std::vector<Vertex> walk_path(const std::vector<std::vector<Vertex>>& adj, const std::vector<char>& keep) {
  std::vector<Vertex> members;
  for (Vertex v = 0; v < static_cast<Vertex>(keep.size()); ++v) {
    if (keep[static_cast<std::size_t>(v)]) members.push_back(v);
  }
  if (members.empty()) return {};
  auto kept_degree = [&](Vertex v) {
    return std::count_if(adj[static_cast<std::size_t>(v)].begin(), adj[static_cast<std::size_t>(v)].end(),
                         [&](Vertex w) { return keep[static_cast<std::size_t>(w)] != 0; });
  };
  Vertex start = members.front();
  for (Vertex v : members) {
    if (kept_degree(v) <= 1) {
      start = v;
      break;
    }
  }
  std::vector<Vertex> order{start};
  Vertex prev = -1;
  Vertex cur = start;
  while (true) {
    Vertex next = -1;
    for (Vertex w : adj[static_cast<std::size_t>(cur)]) {
      if (w != prev && keep[static_cast<std::size_t>(w)]) {
        next = w;
        break;
      }
    }
    if (next < 0) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

}  // namespace

bool is_tree(const SpanningTree& t) {
  if (t.order < 1) return false;
  if (t.edges.size() != static_cast<std::size_t>(t.order - 1)) return false;
  Dsu dsu(t.order);
  for (const auto& e : t.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= t.order || e.v >= t.order || e.u == e.v) return false;
    if (!dsu.unite(e.u, e.v)) return false;
  }
  return true;
}

std::optional<std::string> check_spanning_tree(const Graph& host, const SpanningTree& t) {
  if (t.order != host.order()) return "tree order differs from host order";
  if (t.edges.size() + 1 != static_cast<std::size_t>(t.order)) return "tree must have n-1 edges";
  for (const auto& e : t.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= t.order || e.v >= t.order) return "tree edge endpoint out of range";
    if (!host.adjacent(e.u, e.v)) {
      return "tree edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") not in host";
    }
  }
  if (!is_tree(t)) return "tree edges contain a cycle";
  return std::nullopt;
}

BranchProfile branch_profile(const SpanningTree& t) {
  BranchProfile p;
  auto deg = t.degrees();
  for (Vertex v = 0; v < t.order; ++v) {
    int d = deg[static_cast<std::size_t>(v)];
    if (d > 2) p.branch_vertices.push_back(v);
    if (d == 3) p.degree3_vertices.push_back(v);
    p.max_degree = std::max(p.max_degree, d);
  }
  return p;
}

std::optional<std::string> check_certificate(const Graph& host, const CaterpillarCertificate& cert) {
  if (auto err = check_spanning_tree(host, cert.tree)) return err;
  std::set<Edge> tree_edges(cert.tree.edges.begin(), cert.tree.edges.end());
  std::vector<char> on_spine(static_cast<std::size_t>(cert.tree.order), 0);
  for (std::size_t i = 0; i < cert.spine.size(); ++i) {
    Vertex v = cert.spine[i];
    if (v < 0 || v >= cert.tree.order) return "spine vertex out of range";
    if (on_spine[static_cast<std::size_t>(v)]) return "spine repeats vertex " + std::to_string(v);
    on_spine[static_cast<std::size_t>(v)] = 1;
    if (i > 0 && !tree_edges.contains(make_edge(cert.spine[i - 1], v))) {
      return "spine step " + std::to_string(cert.spine[i - 1]) + "-" + std::to_string(v) + " is not a tree edge";
    }
  }
  for (Vertex b : branch_profile(cert.tree).branch_vertices) {
    if (!on_spine[static_cast<std::size_t>(b)]) return "branch vertex " + std::to_string(b) + " is off the spine";
  }
  return std::nullopt;
}

std::string_view to_string(TreeShape shape) {
  switch (shape) {
    case TreeShape::path: return "path";
    case TreeShape::spider: return "spider";
    case TreeShape::caterpillar: return "caterpillar";
    case TreeShape::generalized_caterpillar: return "generalized_caterpillar";
    case TreeShape::other: return "other";
  }
  return "other";
}

TreeClassification classify_tree(const SpanningTree& t) {
  const auto n = static_cast<std::size_t>(t.order);
  auto adj = t.adjacency();
  auto deg = t.degrees();
  auto profile = branch_profile(t);
  const auto& branch = profile.branch_vertices;

  TreeClassification out;
  out.is_spider = branch.size() <= 1;

  // Caterpillar: deleting all leaves leaves a path (possibly empty).
  {
    std::vector<char> inner(n, 0);
    for (std::size_t v = 0; v < n; ++v) inner[v] = deg[v] >= 2;
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) {
      if (!inner[v]) continue;
      auto d = std::count_if(adj[v].begin(), adj[v].end(), [&](Vertex w) { return inner[static_cast<std::size_t>(w)] != 0; });
      ok = d <= 2;
    }
    out.is_caterpillar = ok;
  }

  // Generalized caterpillar: strip non-branch leaves until only the minimal
  // subtree spanning the branch vertices remains, then test it is a path.
  std::vector<Vertex> spine;
  if (profile.max_degree <= 2) {
    std::vector<char> all(n, 1);
    spine = walk_path(adj, all);
    out.is_generalized_caterpillar = true;
  } else if (branch.size() == 1) {
    spine = branch;
    out.is_generalized_caterpillar = true;
  } else {
    std::vector<char> keep(n, 1);
    std::vector<int> live_degree = deg;
    std::vector<char> is_branch(n, 0);
    for (Vertex b : branch) is_branch[static_cast<std::size_t>(b)] = 1;
    std::vector<Vertex> queue;
    for (std::size_t v = 0; v < n; ++v) {
      if (live_degree[v] <= 1 && !is_branch[v]) queue.push_back(static_cast<Vertex>(v));
    }
    while (!queue.empty()) {
      Vertex v = queue.back();
      queue.pop_back();
      auto vi = static_cast<std::size_t>(v);
      if (!keep[vi]) continue;
      keep[vi] = 0;
      for (Vertex w : adj[vi]) {
        auto wi = static_cast<std::size_t>(w);
        if (!keep[wi]) continue;
        if (--live_degree[wi] <= 1 && !is_branch[wi]) queue.push_back(w);
      }
    }
    bool path_shaped = true;
    for (std::size_t v = 0; v < n && path_shaped; ++v) {
      if (keep[v]) path_shaped = live_degree[v] <= 2;
    }
    if (path_shaped) {
      spine = walk_path(adj, keep);
      out.is_generalized_caterpillar = true;
    }
  }

  if (profile.max_degree <= 2) {
    out.shape = TreeShape::path;
  } else if (out.is_spider) {
    out.shape = TreeShape::spider;
  } else if (out.is_caterpillar) {
    out.shape = TreeShape::caterpillar;
  } else if (out.is_generalized_caterpillar) {
    out.shape = TreeShape::generalized_caterpillar;
  }
  if (out.is_generalized_caterpillar) out.certificate = CaterpillarCertificate{t, std::move(spine)};
  return out;
}

}  // namespace sgc
