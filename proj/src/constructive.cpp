#include "sgc/constructive.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "bits.hpp"
#include "sgc/flow.hpp"
#include "sgc/invariants.hpp"

namespace sgc {

using detail::bit;
using detail::Mask;

std::optional<Fan> vertex_disjoint_fan(const Graph& g, Vertex origin, std::span<const Vertex> targets, int k) {
  std::vector<Vertex> distinct(targets.begin(), targets.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (std::find(distinct.begin(), distinct.end(), origin) != distinct.end()) {
    throw std::invalid_argument("vertex_disjoint_fan: origin must not be a target");
  }
  if (k < 0) throw std::invalid_argument("vertex_disjoint_fan: k must be non-negative");
  if (static_cast<std::size_t>(k) > distinct.size()) return std::nullopt;
  DisjointPaths dp = fan_paths(g, origin, distinct, k);
  if (dp.value < k) return std::nullopt;
  return Fan{origin, std::move(dp.paths)};
}

std::optional<std::string> check_cycle(const Graph& g, const CycleWitness& c) {
  const auto& cyc = c.cycle;
  if (cyc.size() < 3) return "cycle needs at least 3 vertices";
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    Vertex v = cyc[i];
    if (v < 0 || v >= g.order()) return "cycle vertex out of range";
    if (seen[static_cast<std::size_t>(v)]) return "cycle repeats vertex " + std::to_string(v);
    seen[static_cast<std::size_t>(v)] = 1;
    if (!g.adjacent(v, cyc[(i + 1) % cyc.size()])) return "cycle uses a non-edge";
  }
  return std::nullopt;
}

namespace {

std::vector<Vertex> normalized_required(const Graph& g, std::span<const Vertex> required) {
  std::vector<Vertex> req(required.begin(), required.end());
  std::sort(req.begin(), req.end());
  req.erase(std::unique(req.begin(), req.end()), req.end());
  for (Vertex v : req) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("cycle_through: vertex out of range");
  }
  if (req.size() < 2) throw std::invalid_argument("cycle_through: need at least two required vertices");
  return req;
}

// Inserts `w` into `cycle` through two fan paths whose cycle ends bound a
// stretch free of required vertices. Fails when no such pair of fan ends
// exists.
bool absorb(const Graph& g, std::vector<Vertex>& cycle, Vertex w, const std::vector<char>& required) {
  const std::size_t len = cycle.size();
  DisjointPaths fan = fan_paths(g, w, cycle, std::numeric_limits<int>::max());
  if (fan.value < 2) return false;

  std::vector<int> position(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < len; ++i) position[static_cast<std::size_t>(cycle[i])] = static_cast<int>(i);
  std::vector<const std::vector<Vertex>*> path_at(len, nullptr);
  std::vector<std::size_t> ends;
  for (const auto& p : fan.paths) {
    auto pos = static_cast<std::size_t>(position[static_cast<std::size_t>(p.back())]);
    path_at[pos] = &p;
    ends.push_back(pos);
  }
  std::sort(ends.begin(), ends.end());

  for (std::size_t i = 0; i < ends.size(); ++i) {
    std::size_t p = ends[i];
    std::size_t q = ends[(i + 1) % ends.size()];
    bool clear = true;
    for (std::size_t s = (p + 1) % len; s != q && clear; s = (s + 1) % len) {
      clear = !required[static_cast<std::size_t>(cycle[s])];
    }
    if (!clear) continue;

    // Keep q..p forward, return to w along p's fan path, leave along q's.
    std::vector<Vertex> next;
    for (std::size_t s = q;; s = (s + 1) % len) {
      next.push_back(cycle[s]);
      if (s == p) break;
    }
    const auto& back = *path_at[p];
    for (std::size_t k = back.size() - 1; k-- > 0;) next.push_back(back[k]);
    const auto& out = *path_at[q];
    for (std::size_t k = 1; k + 1 < out.size(); ++k) next.push_back(out[k]);
    cycle = std::move(next);
    return true;
  }
  return false;
}

std::optional<std::vector<Vertex>> constructive_cycle(const Graph& g, const std::vector<Vertex>& req) {
  DisjointPaths two = disjoint_paths(g, req[0], req[1], 2);
  if (two.value < 2) return std::nullopt;
  std::vector<Vertex> cycle = two.paths[0];
  const auto& other = two.paths[1];
  for (std::size_t k = other.size() - 1; k-- > 1;) cycle.push_back(other[k]);

  std::vector<char> required(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : req) required[static_cast<std::size_t>(v)] = 1;
  for (std::size_t i = 2; i < req.size(); ++i) {
    if (std::find(cycle.begin(), cycle.end(), req[i]) != cycle.end()) continue;
    if (!absorb(g, cycle, req[i], required)) return std::nullopt;
  }
  return cycle;
}

class CycleDfs {
 public:
  CycleDfs(const Graph& g, Mask required) : g_(g), required_(required) {}

  std::optional<std::vector<Vertex>> run(Vertex root) {
    root_ = root;
    path_.assign(1, root);
    if (extend(root, bit(root))) return path_;
    return std::nullopt;
  }

 private:
  bool extend(Vertex v, Mask used) {
    if (path_.size() >= 3 && (used & required_) == required_ && g_.adjacent(v, root_)) return true;
    for (Mask m = g_.neighbor_mask(v) & ~used; m; m &= m - 1) {
      Vertex w = detail::lowest(m);
      path_.push_back(w);
      if (extend(w, used | bit(w))) return true;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  Mask required_;
  Vertex root_ = 0;
  std::vector<Vertex> path_;
};

Construction finish_construction(const Graph& g, const SpanningTree& tree) {
  Construction out;
  out.base_tree = tree;
  auto branch = branch_profile(tree).branch_vertices;
  if (branch.size() <= 1) {
    out.certificate = classify_tree(tree).certificate;
  } else {
    CycleWitness cycle = cycle_through(g, branch);
    out.certificate = merge_and_prune(g, tree, cycle);
  }
  if (!out.certificate) throw std::logic_error("tree with at most one branch vertex was not classified as a caterpillar");
  if (auto err = check_certificate(g, *out.certificate)) throw std::logic_error("construction produced an invalid certificate: " + *err);
  out.status = ConstructionStatus::certificate;
  return out;
}

Construction failed(ConstructionStatus status, std::string reason) {
  Construction out;
  out.status = status;
  out.reason = std::move(reason);
  return out;
}

}  // namespace

std::optional<CycleWitness> cycle_through_exhaustive(const Graph& g, std::span<const Vertex> required) {
  require_mask_order(g, "cycle_through_exhaustive");
  auto req = normalized_required(g, required);
  CycleDfs dfs(g, detail::mask_of(req));
  if (auto cyc = dfs.run(req[0])) return CycleWitness{std::move(*cyc)};
  return std::nullopt;
}

CycleWitness cycle_through(const Graph& g, std::span<const Vertex> required, CycleThroughOptions options) {
  auto req = normalized_required(g, required);
  if (auto cyc = constructive_cycle(g, req)) return CycleWitness{std::move(*cyc)};
  if (options.allow_fallback && g.order() <= kCycleFallbackOrder) {
    if (auto cyc = cycle_through_exhaustive(g, req)) return std::move(*cyc);
  }
  throw std::domain_error("cycle_through: no cycle through the required vertices was found");
}

CaterpillarCertificate merge_and_prune(const Graph& g, const SpanningTree& tree, const CycleWitness& cycle) {
  if (auto err = check_spanning_tree(g, tree)) throw std::invalid_argument("merge_and_prune: " + *err);
  if (auto err = check_cycle(g, cycle)) throw std::invalid_argument("merge_and_prune: " + *err);
  const auto& cyc = cycle.cycle;
  const std::size_t len = cyc.size();

  std::vector<char> on_cycle(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : cyc) on_cycle[static_cast<std::size_t>(v)] = 1;
  for (Vertex b : branch_profile(tree).branch_vertices) {
    if (!on_cycle[static_cast<std::size_t>(b)]) {
      throw std::invalid_argument("merge_and_prune: branch vertex " + std::to_string(b) + " is not on the cycle");
    }
  }

  // Remove the smallest cycle edge; the rest of the cycle is the spine path.
  std::size_t cut = 0;
  for (std::size_t i = 1; i < len; ++i) {
    if (make_edge(cyc[i], cyc[(i + 1) % len]) < make_edge(cyc[cut], cyc[(cut + 1) % len])) cut = i;
  }
  const Edge removed = make_edge(cyc[cut], cyc[(cut + 1) % len]);
  std::vector<Vertex> spine;
  for (std::size_t k = 1; k <= len; ++k) spine.push_back(cyc[(cut + k) % len]);

  std::vector<Edge> spine_edges;
  for (std::size_t i = 1; i < spine.size(); ++i) spine_edges.push_back(make_edge(spine[i - 1], spine[i]));
  std::sort(spine_edges.begin(), spine_edges.end());

  std::vector<Edge> others;
  for (const auto& e : tree.edges) {
    if (e != removed && !std::binary_search(spine_edges.begin(), spine_edges.end(), e)) others.push_back(e);
  }
  std::sort(others.begin(), others.end());
  others.erase(std::unique(others.begin(), others.end()), others.end());

  // Deleting the smallest off-spine edge of every remaining cycle leaves the
  // same tree as keeping the spine and then adding off-spine edges from the
  // largest down whenever they join two components.
  std::vector<int> parent(static_cast<std::size_t>(g.order()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  std::vector<Edge> kept;
  for (const auto& e : spine_edges) {
    parent[static_cast<std::size_t>(find(e.u))] = find(e.v);
    kept.push_back(e);
  }
  for (auto it = others.rbegin(); it != others.rend(); ++it) {
    int a = find(it->u), b = find(it->v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      kept.push_back(*it);
    }
  }

  CaterpillarCertificate cert{make_tree(g.order(), std::move(kept)), std::move(spine)};
  if (auto err = check_certificate(g, cert)) throw std::logic_error("merge_and_prune produced an invalid certificate: " + *err);
  return cert;
}

std::string_view to_string(ConstructionStatus s) {
  switch (s) {
    case ConstructionStatus::certificate: return "certificate";
    case ConstructionStatus::hypothesis_failed: return "hypothesis_failed";
    case ConstructionStatus::budget_exhausted: return "budget_exhausted";
  }
  return "budget_exhausted";
}

Construction construct_sgc_low_branch(const Graph& g, const Budget& budget) {
  if (!is_connected(g)) throw std::invalid_argument("construct_sgc_low_branch: graph must be connected");
  const int kappa = vertex_connectivity(g).kappa;
  MinBranchResult mb = min_branch_spanning_tree(g, budget);
  if (mb.branch_count > kappa) {
    if (mb.exact) {
      return failed(ConstructionStatus::hypothesis_failed,
                    "s(G) = " + std::to_string(mb.branch_count) + " exceeds kappa = " + std::to_string(kappa));
    }
    return failed(ConstructionStatus::budget_exhausted,
                  "no spanning tree with at most kappa = " + std::to_string(kappa) + " branch vertices found within budget");
  }
  return finish_construction(g, mb.witness);
}

TreeSearch spanning_3tree_bounded(const Graph& g, int max_degree3, const Budget& budget) {
  if (max_degree3 < 0) throw std::invalid_argument("spanning_3tree_bounded: bound must be non-negative");
  if (max_degree3 == 0) return hamiltonian_path(g, budget);
  return degree_constrained_spanning_tree(g, {.max_degree = 3, .max_branch = max_degree3}, budget);
}

Construction construct_sgc_bounded_3tree(const Graph& g, const Budget& budget) {
  if (!is_connected(g)) throw std::invalid_argument("construct_sgc_bounded_3tree: graph must be connected");
  const int kappa = vertex_connectivity(g).kappa;
  IndependenceCertificate alpha = independence_number(g, budget);
  const int limit = 2 * kappa + 1;
  if (alpha.alpha > limit) {
    return failed(ConstructionStatus::hypothesis_failed,
                  "alpha = " + std::to_string(alpha.alpha) + " exceeds 2*kappa+1 = " + std::to_string(limit));
  }
  if (!alpha.exhaustive) {
    return failed(ConstructionStatus::budget_exhausted, "independence number not resolved within budget");
  }
  TreeSearch base = spanning_3tree_bounded(g, kappa, budget);
  if (base.verdict == Verdict::unknown) {
    return failed(ConstructionStatus::budget_exhausted, "spanning 3-tree search ran out of budget");
  }
  if (base.verdict == Verdict::no) {
    throw std::logic_error("no spanning 3-tree with at most kappa degree-3 vertices although alpha <= 2*kappa+1");
  }
  Construction out = finish_construction(g, *base.tree);
  if (out.certificate->tree.max_degree() > 5) throw std::logic_error("bounded 3-tree construction exceeded degree 5");
  return out;
}

}  // namespace sgc
