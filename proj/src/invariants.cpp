#include "sgc/invariants.hpp"

#include <algorithm>
#include <bit>

#include "sgc/flow.hpp"

namespace sgc {

namespace {

using Mask = std::uint64_t;

std::vector<Vertex> mask_to_vertices(Mask m) {
  std::vector<Vertex> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

// Maximum clique in the complement, i.e. maximum independent set of G. Greedy
// colouring of the complement partitions the candidates into cliques of G,
// and the number of colours bounds how many more vertices can be taken.
class IndependentSetSearch {
 public:
  IndependentSetSearch(const Graph& g, const Budget& budget) : meter_(budget), n_(g.order()) {
    Mask all = g.vertex_mask();
    non_adjacent_.resize(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) {
      non_adjacent_[static_cast<std::size_t>(v)] = all & ~g.neighbor_mask(v) & ~(Mask{1} << v);
    }
  }

  IndependenceCertificate run(Mask all) {
    // Greedy seed so an exhausted budget still reports something useful.
    Mask greedy = 0;
    for (Mask cand = all; cand;) {
      Vertex v = std::countr_zero(cand);
      greedy |= Mask{1} << v;
      cand &= non_adjacent_[static_cast<std::size_t>(v)];
    }
    best_ = greedy;
    best_size_ = std::popcount(greedy);
    expand(0, 0, all);
    return {best_size_, mask_to_vertices(best_), !meter_.exhausted()};
  }

 private:
  void expand(Mask current, int size, Mask candidates) {
    if (!meter_.tick()) return;
    std::vector<Vertex> order;
    std::vector<int> bound;
    colour(candidates, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (size + bound[i] <= best_size_) return;
      Vertex v = order[i];
      Mask next = candidates & non_adjacent_[static_cast<std::size_t>(v)];
      Mask chosen = current | (Mask{1} << v);
      if (next == 0) {
        if (size + 1 > best_size_) {
          best_size_ = size + 1;
          best_ = chosen;
        }
      } else {
        expand(chosen, size + 1, next);
        if (meter_.exhausted()) return;
      }
      candidates &= ~(Mask{1} << v);
    }
  }

  // Each colour class is a clique of G, so it contributes at most one vertex.
  void colour(Mask candidates, std::vector<Vertex>& order, std::vector<int>& bound) const {
    int k = 0;
    Mask uncoloured = candidates;
    while (uncoloured) {
      ++k;
      Mask available = uncoloured;
      while (available) {
        Vertex v = std::countr_zero(available);
        available &= ~non_adjacent_[static_cast<std::size_t>(v)] & ~(Mask{1} << v);
        uncoloured &= ~(Mask{1} << v);
        order.push_back(v);
        bound.push_back(k);
      }
    }
  }

  BudgetMeter meter_;
  int n_;
  std::vector<Mask> non_adjacent_;
  Mask best_ = 0;
  int best_size_ = 0;
};

}  // namespace

IndependenceCertificate independence_number(const Graph& g, const Budget& budget) {
  require_mask_order(g, "independence_number");
  if (g.order() == 0) return {0, {}, true};
  IndependentSetSearch search(g, budget);
  return search.run(g.vertex_mask());
}

ConnectivityCertificate vertex_connectivity(const Graph& g) {
  const int n = g.order();
  ConnectivityCertificate cert;
  if (n <= 1) {
    cert.kappa = 0;
    cert.complete = n == 1;
    return cert;
  }
  if (!is_connected(g)) {
    cert.kappa = 0;
    cert.separator = std::vector<Vertex>{};
    return cert;
  }
  if (g.size() == static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2) {
    cert.kappa = n - 1;
    cert.complete = true;
    return cert;
  }

  // Some vertex among the first best+1 avoids a minimum separator, and the
  // far side of that separator contains a vertex it is not adjacent to.
  int best = n - 1;
  bool found = false;
  std::vector<Vertex> best_cut;
  for (Vertex i = 0; i <= best && i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) continue;
      VertexCut cut = min_vertex_cut(g, i, j);
      if (!found || cut.size < best) {
        found = true;
        best = cut.size;
        best_cut = std::move(cut.separator);
      }
    }
  }
  cert.kappa = best;
  std::sort(best_cut.begin(), best_cut.end());
  cert.separator = std::move(best_cut);
  return cert;
}

bool is_independent_set(const Graph& g, std::span<const Vertex> set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (set[i] == set[j] || g.adjacent(set[i], set[j])) return false;
    }
  }
  return true;
}

bool is_separator(const Graph& g, std::span<const Vertex> set) {
  std::vector<char> removed(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : set) removed[static_cast<std::size_t>(v)] = 1;
  auto remaining = std::count(removed.begin(), removed.end(), 0);
  return remaining >= 2 && !is_connected_without(g, set);
}

}  // namespace sgc
