#include "sgc/spanning.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "bits.hpp"
#include "state_set.hpp"

namespace sgc {

using detail::bit;
using detail::Mask;

namespace {

void require_connected(const Graph& g, const char* who) {
  if (!is_connected(g)) throw std::invalid_argument(std::string(who) + ": graph must be connected");
}

SpanningTree tree_from_path(int order, const std::vector<Vertex>& path) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < path.size(); ++i) edges.push_back(make_edge(path[i - 1], path[i]));
  return make_tree(order, std::move(edges));
}

// ---------------------------------------------------------------------------
// Hamiltonian path: DFS over (covered set, current end) with failed states
// memoized, pruned when the uncovered vertices are not all reachable from the
// current end.

class HamiltonPathSearch {
 public:
  HamiltonPathSearch(const Graph& g, BudgetMeter& meter)
      : g_(g), meter_(meter), n_(g.order()), all_(g.vertex_mask()), memo_(n_ <= 58) {}

  TreeSearch run() {
    for (Vertex s = 0; s < n_; ++s) {
      path_.assign(1, s);
      Verdict r = extend(s, bit(s));
      if (r == Verdict::yes) return {Verdict::yes, tree_from_path(n_, path_)};
      if (r == Verdict::unknown) return {Verdict::unknown, std::nullopt};
    }
    return {Verdict::no, std::nullopt};
  }

 private:
  Verdict extend(Vertex v, Mask covered) {
    if (covered == all_) return Verdict::yes;
    if (!meter_.tick()) return Verdict::unknown;
    const Mask key = covered | (Mask{static_cast<std::uint64_t>(v)} << n_);
    if (memo_ && failed_.contains(key)) return Verdict::no;
    const Mask open = all_ & ~covered;
    if (detail::closure(g_, g_.neighbor_mask(v) & open, open) != open) {
      if (memo_) failed_.insert(key);
      return Verdict::no;
    }
    for (Mask next = g_.neighbor_mask(v) & open; next; next &= next - 1) {
      Vertex w = detail::lowest(next);
      path_.push_back(w);
      Verdict r = extend(w, covered | bit(w));
      if (r != Verdict::no) return r;
      path_.pop_back();
    }
    if (memo_) failed_.insert(key);
    return Verdict::no;
  }

  const Graph& g_;
  BudgetMeter& meter_;
  int n_;
  Mask all_;
  bool memo_;
  detail::StateSet failed_;
  std::vector<Vertex> path_;
};

// ---------------------------------------------------------------------------
// Spine-and-legs search. A generalized caterpillar is a spine path with
// vertex-disjoint paths ("legs") hanging from spine vertices by one end. The
// search walks the spine; at the current spine end q it either hangs a leg
// from q or advances the spine. State: (covered, q, current leg end or none).
// With spine advances disabled it decides spanning spiders.

class CaterpillarSearch {
 public:
  CaterpillarSearch(const Graph& g, BudgetMeter& meter, bool advance_spine)
      : g_(g), meter_(meter), n_(g.order()), all_(g.vertex_mask()), memo_(n_ <= 51), advance_spine_(advance_spine) {}

  Verdict run() {
    for (Vertex q = 0; q < n_; ++q) {
      moves_.clear();
      start_ = q;
      Verdict r = at_spine(q, bit(q));
      if (r != Verdict::no) return r;
    }
    return Verdict::no;
  }

  CaterpillarCertificate certificate() const {
    std::vector<Edge> edges;
    std::vector<Vertex> spine{start_};
    for (const auto& m : moves_) {
      edges.push_back(make_edge(m.from, m.to));
      if (m.spine) spine.push_back(m.to);
    }
    return {make_tree(n_, std::move(edges)), std::move(spine)};
  }

 private:
  struct Move {
    Vertex from;
    Vertex to;
    bool spine;
  };

  Mask key(Vertex q, Vertex leg, Mask covered) const {
    return covered | (Mask{static_cast<std::uint64_t>(q)} << n_) |
           (Mask{static_cast<std::uint64_t>(leg + 1)} << (n_ + 6));
  }

  // Every uncovered component must still be reachable from q (through a leg
  // or the spine) or from the open leg end.
  bool feasible(Mask open, Mask anchors) const {
    Mask touch = 0;
    for (Mask a = anchors; a; a &= a - 1) touch |= g_.neighbor_mask(detail::lowest(a));
    return detail::for_each_component(g_, open, [&](Mask comp) { return (comp & touch) != 0; });
  }

  Verdict at_spine(Vertex q, Mask covered) {
    if (covered == all_) return Verdict::yes;
    if (!meter_.tick()) return Verdict::unknown;
    const Mask k = key(q, -1, covered);
    if (memo_ && failed_.contains(k)) return Verdict::no;
    const Mask open = all_ & ~covered;
    if (feasible(open, bit(q))) {
      const Mask next = g_.neighbor_mask(q) & open;
      if (advance_spine_) {
        for (Mask m = next; m; m &= m - 1) {
          Vertex w = detail::lowest(m);
          moves_.push_back({q, w, true});
          Verdict r = at_spine(w, covered | bit(w));
          if (r != Verdict::no) return r;
          moves_.pop_back();
        }
      }
      for (Mask m = next; m; m &= m - 1) {
        Vertex u = detail::lowest(m);
        moves_.push_back({q, u, false});
        Verdict r = on_leg(q, u, covered | bit(u));
        if (r != Verdict::no) return r;
        moves_.pop_back();
      }
    }
    if (memo_) failed_.insert(k);
    return Verdict::no;
  }

  Verdict on_leg(Vertex q, Vertex v, Mask covered) {
    if (covered == all_) return Verdict::yes;
    if (!meter_.tick()) return Verdict::unknown;
    const Mask k = key(q, v, covered);
    if (memo_ && failed_.contains(k)) return Verdict::no;
    const Mask open = all_ & ~covered;
    if (feasible(open, bit(q) | bit(v))) {
      for (Mask m = g_.neighbor_mask(v) & open; m; m &= m - 1) {
        Vertex w = detail::lowest(m);
        moves_.push_back({v, w, false});
        Verdict r = on_leg(q, w, covered | bit(w));
        if (r != Verdict::no) return r;
        moves_.pop_back();
      }
      Verdict r = at_spine(q, covered);
      if (r != Verdict::no) return r;
    }
    if (memo_) failed_.insert(k);
    return Verdict::no;
  }

  const Graph& g_;
  BudgetMeter& meter_;
  int n_;
  Mask all_;
  bool memo_;
  bool advance_spine_;
  Vertex start_ = 0;
  std::vector<Move> moves_;
  detail::StateSet failed_;
};

// ---------------------------------------------------------------------------
// Edge branching: decide each edge in turn; include it when it joins two
// components and respects the degree limits, exclude it when the rest can
// still connect the graph. Every spanning tree is reached by exactly one path.

class RollbackDsu {
 public:
  explicit RollbackDsu(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) const {
    while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
    history_.push_back(b);
  }
  void undo() {
    int b = history_.back();
    history_.pop_back();
    int a = parent_[static_cast<std::size_t>(b)];
    size_[static_cast<std::size_t>(a)] -= size_[static_cast<std::size_t>(b)];
    parent_[static_cast<std::size_t>(b)] = b;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
};

class EdgeBranchSearch {
 public:
  enum class Stop { found, exhausted, budget };

  EdgeBranchSearch(const Graph& g, DegreeLimits limits, BudgetMeter& meter,
                   std::function<bool(const SpanningTree&)> on_tree)
      : g_(g),
        limits_(limits),
        meter_(meter),
        on_tree_(std::move(on_tree)),
        dsu_(g.order()),
        degree_(static_cast<std::size_t>(g.order()), 0) {
    order_edges();
  }

  Stop run() { return step(0); }

 private:
  void order_edges() {
    // BFS rank so included edges tend to grow one connected piece.
    const int n = g_.order();
    std::vector<int> rank(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> queue{0};
    rank[0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex w : g_.neighbors(queue[head])) {
        if (rank[static_cast<std::size_t>(w)] < 0) {
          rank[static_cast<std::size_t>(w)] = static_cast<int>(queue.size());
          queue.push_back(w);
        }
      }
    }
    edges_ = g_.edges();
    auto key = [&](const Edge& e) {
      int a = rank[static_cast<std::size_t>(e.u)];
      int b = rank[static_cast<std::size_t>(e.v)];
      return std::pair{std::max(a, b), std::min(a, b)};
    };
    std::stable_sort(edges_.begin(), edges_.end(), [&](const Edge& x, const Edge& y) { return key(x) < key(y); });
  }

  bool admits(Vertex v) const {
    int d = degree_[static_cast<std::size_t>(v)] + 1;
    if (d > limits_.max_degree) return false;
    return d != 3 || branch_ < limits_.max_branch;
  }

  void add_degree(Vertex v, int delta) {
    int& d = degree_[static_cast<std::size_t>(v)];
    if (delta > 0 && d == 2) ++branch_;
    if (delta < 0 && d == 3) --branch_;
    d += delta;
  }

  bool connected_without(std::size_t idx) const {
    RollbackDsu dsu(g_.order());
    int pieces = g_.order();
    auto join = [&](const Edge& e) {
      if (dsu.find(e.u) != dsu.find(e.v)) {
        dsu.unite(e.u, e.v);
        --pieces;
      }
    };
    for (const auto& e : chosen_) join(e);
    for (std::size_t i = idx + 1; i < edges_.size(); ++i) join(edges_[i]);
    return pieces == 1;
  }

  Stop step(std::size_t idx) {
    if (chosen_.size() + 1 == static_cast<std::size_t>(g_.order())) {
      return on_tree_(make_tree(g_.order(), chosen_)) ? Stop::found : Stop::exhausted;
    }
    if (idx == edges_.size()) return Stop::exhausted;
    if (!meter_.tick()) return Stop::budget;

    const Edge e = edges_[idx];
    if (dsu_.find(e.u) != dsu_.find(e.v) && admits(e.u)) {
      add_degree(e.u, 1);
      if (admits(e.v)) {
        add_degree(e.v, 1);
        dsu_.unite(e.u, e.v);
        chosen_.push_back(e);
        Stop r = step(idx + 1);
        if (r != Stop::exhausted) return r;
        chosen_.pop_back();
        dsu_.undo();
        add_degree(e.v, -1);
      }
      add_degree(e.u, -1);
    }
    if (connected_without(idx)) return step(idx + 1);
    return Stop::exhausted;
  }

  const Graph& g_;
  DegreeLimits limits_;
  BudgetMeter& meter_;
  std::function<bool(const SpanningTree&)> on_tree_;
  std::vector<Edge> edges_;
  RollbackDsu dsu_;
  std::vector<int> degree_;
  int branch_ = 0;
  std::vector<Edge> chosen_;
};

TreeSearch edge_branch(const Graph& g, DegreeLimits limits, BudgetMeter& meter) {
  std::optional<SpanningTree> found;
  EdgeBranchSearch search(g, limits, meter, [&](const SpanningTree& t) {
    found = t;
    return true;
  });
  switch (search.run()) {
    case EdgeBranchSearch::Stop::found: return {Verdict::yes, std::move(found)};
    case EdgeBranchSearch::Stop::exhausted: return {Verdict::no, std::nullopt};
    case EdgeBranchSearch::Stop::budget: break;
  }
  return {Verdict::unknown, std::nullopt};
}

TreeSearch spider_search(const Graph& g, BudgetMeter& meter) {
  CaterpillarSearch search(g, meter, false);
  Verdict r = search.run();
  if (r != Verdict::yes) return {r, std::nullopt};
  return {Verdict::yes, search.certificate().tree};
}

SpanningTree dfs_tree(const Graph& g) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Edge> edges;
  std::vector<std::pair<Vertex, std::size_t>> stack{{0, 0}};
  seen[0] = 1;
  while (!stack.empty()) {
    auto& [v, i] = stack.back();
    const auto& nbrs = g.neighbors(v);
    if (i == nbrs.size()) {
      stack.pop_back();
      continue;
    }
    Vertex w = nbrs[i++];
    if (!seen[static_cast<std::size_t>(w)]) {
      seen[static_cast<std::size_t>(w)] = 1;
      edges.push_back(make_edge(v, w));
      stack.emplace_back(w, 0);
    }
  }
  return make_tree(g.order(), std::move(edges));
}

}  // namespace

EnumerationResult enumerate_spanning_trees(const Graph& g, const std::function<void(const SpanningTree&)>& visit,
                                           std::uint64_t cap) {
  require_connected(g, "enumerate_spanning_trees");
  EnumerationResult result;
  if (cap == 0) {
    result.truncated = true;
    return result;
  }
  BudgetMeter meter(Budget::unlimited());
  EdgeBranchSearch search(g, {}, meter, [&](const SpanningTree& t) {
    visit(t);
    return ++result.visited >= cap;
  });
  // Reaching the cap exactly on the last tree still counts as truncated:
  // there is no cheap way to tell without continuing.
  result.truncated = search.run() == EdgeBranchSearch::Stop::found;
  return result;
}

TreeSearch hamiltonian_path(const Graph& g, const Budget& budget) {
  require_connected(g, "hamiltonian_path");
  require_mask_order(g, "hamiltonian_path");
  BudgetMeter meter(budget);
  return HamiltonPathSearch(g, meter).run();
}

TreeSearch spanning_spider(const Graph& g, const Budget& budget) {
  require_connected(g, "spanning_spider");
  require_mask_order(g, "spanning_spider");
  BudgetMeter meter(budget);
  return spider_search(g, meter);
}

TreeSearch degree_constrained_spanning_tree(const Graph& g, DegreeLimits limits, const Budget& budget) {
  require_connected(g, "degree_constrained_spanning_tree");
  BudgetMeter meter(budget);
  return edge_branch(g, limits, meter);
}

MinBranchResult min_branch_spanning_tree(const Graph& g, const Budget& budget) {
  require_connected(g, "min_branch_spanning_tree");
  require_mask_order(g, "min_branch_spanning_tree");
  BudgetMeter meter(budget);

  SpanningTree upper = dfs_tree(g);
  int upper_count = static_cast<int>(branch_profile(upper).branch_vertices.size());
  for (int b = 0; b < upper_count; ++b) {
    TreeSearch level = b == 0   ? HamiltonPathSearch(g, meter).run()
                       : b == 1 ? spider_search(g, meter)
                                : edge_branch(g, {.max_branch = b}, meter);
    if (level.verdict == Verdict::yes) return {b, *level.tree, true};
    if (level.verdict == Verdict::unknown) return {upper_count, upper, false};
  }
  return {upper_count, upper, true};
}

SgcDecision decide_sgc(const Graph& g, const Budget& budget, SgcMethod method) {
  require_connected(g, "decide_sgc");
  SgcDecision decision;
  if (method == SgcMethod::enumeration) {
    std::optional<CaterpillarCertificate> found;
    std::uint64_t seen = 0;
    BudgetMeter meter(Budget::unlimited());
    EdgeBranchSearch search(g, {}, meter, [&](const SpanningTree& t) {
      ++seen;
      auto cls = classify_tree(t);
      if (cls.is_generalized_caterpillar) {
        found = std::move(cls.certificate);
        return true;
      }
      return seen >= budget.nodes;
    });
    auto stop = search.run();
    if (found) {
      decision.verdict = Verdict::yes;
      decision.certificate = std::move(found);
    } else {
      decision.verdict = stop == EdgeBranchSearch::Stop::found ? Verdict::unknown : Verdict::no;
    }
  } else {
    require_mask_order(g, "decide_sgc");
    BudgetMeter meter(budget);
    CaterpillarSearch search(g, meter, true);
    decision.verdict = search.run();
    if (decision.verdict == Verdict::yes) decision.certificate = search.certificate();
  }
  if (decision.certificate) {
    if (auto err = check_certificate(g, *decision.certificate)) {
      throw std::logic_error("decide_sgc produced an invalid certificate: " + *err);
    }
  }
  return decision;
}

}  // namespace sgc
