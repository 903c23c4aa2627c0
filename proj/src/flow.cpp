#include "sgc/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace sgc {

namespace {

class Network {
 public:
  explicit Network(int nodes) : out_(static_cast<std::size_t>(nodes)) {}

  void add_arc(int from, int to, int cap) {
    out_[static_cast<std::size_t>(from)].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, cap, 0});
    out_[static_cast<std::size_t>(to)].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0, 0});
  }

  int max_flow(int source, int sink, int limit) {
    int total = 0;
    std::vector<int> via(out_.size());
    while (total < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> queue;
      queue.push(source);
      via[static_cast<std::size_t>(source)] = -2;
      while (!queue.empty() && via[static_cast<std::size_t>(sink)] == -1) {
        int node = queue.front();
        queue.pop();
        for (int a : out_[static_cast<std::size_t>(node)]) {
          const Arc& arc = arcs_[static_cast<std::size_t>(a)];
          if (arc.cap - arc.flow > 0 && via[static_cast<std::size_t>(arc.to)] == -1) {
            via[static_cast<std::size_t>(arc.to)] = a;
            queue.push(arc.to);
          }
        }
      }
      if (via[static_cast<std::size_t>(sink)] == -1) break;
      int push = limit - total;
      for (int node = sink; node != source;) {
        const Arc& arc = arcs_[static_cast<std::size_t>(via[static_cast<std::size_t>(node)])];
        push = std::min(push, arc.cap - arc.flow);
        node = arcs_[static_cast<std::size_t>(via[static_cast<std::size_t>(node)] ^ 1)].to;
      }
      for (int node = sink; node != source;) {
        int a = via[static_cast<std::size_t>(node)];
        arcs_[static_cast<std::size_t>(a)].flow += push;
        arcs_[static_cast<std::size_t>(a ^ 1)].flow -= push;
        node = arcs_[static_cast<std::size_t>(a ^ 1)].to;
      }
      total += push;
    }
    return total;
  }

  std::vector<char> residual_reachable(int source) const {
    std::vector<char> seen(out_.size(), 0);
    std::vector<int> stack{source};
    seen[static_cast<std::size_t>(source)] = 1;
    while (!stack.empty()) {
      int node = stack.back();
      stack.pop_back();
      for (int a : out_[static_cast<std::size_t>(node)]) {
        const Arc& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.cap - arc.flow > 0 && !seen[static_cast<std::size_t>(arc.to)]) {
          seen[static_cast<std::size_t>(arc.to)] = 1;
          stack.push_back(arc.to);
        }
      }
    }
    return seen;
  }

  /// Peels one unit source->sink walk off the flow, dropping any cycles met
  /// on the way. Returns the node sequence.
  std::vector<int> take_path(int source, int sink) {
    std::vector<int> walk{source};
    std::vector<int> used;
    while (walk.back() != sink) {
      int node = walk.back();
      int chosen = -1;
      for (int a : out_[static_cast<std::size_t>(node)]) {
        if ((a & 1) == 0 && arcs_[static_cast<std::size_t>(a)].flow > 0) {
          chosen = a;
          break;
        }
      }
      if (chosen < 0) throw std::logic_error("flow decomposition lost conservation");
      arcs_[static_cast<std::size_t>(chosen)].flow -= 1;
      arcs_[static_cast<std::size_t>(chosen ^ 1)].flow += 1;
      int next = arcs_[static_cast<std::size_t>(chosen)].to;
      auto seen = std::find(walk.begin(), walk.end(), next);
      if (seen != walk.end()) {
        walk.erase(seen + 1, walk.end());
      } else {
        walk.push_back(next);
      }
    }
    return walk;
  }

 private:
  struct Arc {
    int to;
    int cap;
    int flow;
  };
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
};

int in_node(Vertex v) { return 2 * v; }
int out_node(Vertex v) { return 2 * v + 1; }

/// Vertex sequence of a split-network walk that starts at out(first).
std::vector<Vertex> walk_to_vertices(const std::vector<int>& walk, Vertex first, int n) {
  std::vector<Vertex> path{first};
  for (int node : walk) {
    if (node < 2 * n && node % 2 == 0) path.push_back(node / 2);
  }
  return path;
}

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range");
}

}  // namespace

DisjointPaths disjoint_paths(const Graph& g, Vertex s, Vertex t, int limit) {
  check_vertex(g, s);
  check_vertex(g, t);
  if (s == t) throw std::invalid_argument("disjoint_paths: s and t must differ");
  const int n = g.order();
  const int inf = n + 1;
  Network net(2 * n);
  for (Vertex v = 0; v < n; ++v) net.add_arc(in_node(v), out_node(v), (v == s || v == t) ? inf : 1);
  for (const auto& e : g.edges()) {
    bool direct = (e.u == s && e.v == t) || (e.u == t && e.v == s);
    net.add_arc(out_node(e.u), in_node(e.v), direct ? 1 : inf);
    net.add_arc(out_node(e.v), in_node(e.u), direct ? 1 : inf);
  }
  DisjointPaths result;
  result.value = net.max_flow(out_node(s), in_node(t), limit);
  for (int i = 0; i < result.value; ++i) {
    result.paths.push_back(walk_to_vertices(net.take_path(out_node(s), in_node(t)), s, n));
  }
  std::sort(result.paths.begin(), result.paths.end());
  return result;
}

DisjointPaths fan_paths(const Graph& g, Vertex origin, std::span<const Vertex> targets, int limit) {
  check_vertex(g, origin);
  const int n = g.order();
  const int inf = n + 1;
  const int sink = 2 * n;
  std::vector<char> is_target(static_cast<std::size_t>(n), 0);
  for (Vertex x : targets) {
    check_vertex(g, x);
    if (x == origin) throw std::invalid_argument("fan_paths: origin must not be a target");
    is_target[static_cast<std::size_t>(x)] = 1;
  }
  Network net(2 * n + 1);
  for (Vertex v = 0; v < n; ++v) {
    if (is_target[static_cast<std::size_t>(v)]) {
      net.add_arc(in_node(v), sink, 1);
    } else {
      net.add_arc(in_node(v), out_node(v), v == origin ? inf : 1);
    }
  }
  for (const auto& e : g.edges()) {
    net.add_arc(out_node(e.u), in_node(e.v), inf);
    net.add_arc(out_node(e.v), in_node(e.u), inf);
  }
  DisjointPaths result;
  result.value = net.max_flow(out_node(origin), sink, limit);
  for (int i = 0; i < result.value; ++i) {
    result.paths.push_back(walk_to_vertices(net.take_path(out_node(origin), sink), origin, n));
  }
  std::sort(result.paths.begin(), result.paths.end());
  return result;
}

VertexCut min_vertex_cut(const Graph& g, Vertex s, Vertex t) {
  check_vertex(g, s);
  check_vertex(g, t);
  if (s == t || g.adjacent(s, t)) throw std::invalid_argument("min_vertex_cut: s and t must be distinct and non-adjacent");
  const int n = g.order();
  const int inf = n + 1;
  Network net(2 * n);
  for (Vertex v = 0; v < n; ++v) net.add_arc(in_node(v), out_node(v), (v == s || v == t) ? inf : 1);
  for (const auto& e : g.edges()) {
    net.add_arc(out_node(e.u), in_node(e.v), inf);
    net.add_arc(out_node(e.v), in_node(e.u), inf);
  }
  VertexCut cut;
  cut.size = net.max_flow(out_node(s), in_node(t), std::numeric_limits<int>::max());
  auto reach = net.residual_reachable(out_node(s));
  for (Vertex v = 0; v < n; ++v) {
    if (v == s || v == t) continue;
    if (reach[static_cast<std::size_t>(in_node(v))] && !reach[static_cast<std::size_t>(out_node(v))]) {
      cut.separator.push_back(v);
    }
  }
  return cut;
}

}  // namespace sgc
