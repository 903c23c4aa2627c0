#include "sgc/cover.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "bits.hpp"
#include "state_set.hpp"

namespace sgc {

using detail::bit;
using detail::Mask;

std::optional<std::string> check_path_cover(const Graph& g, const PathCover& cover) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (const auto& path : cover.paths) {
    if (path.empty()) return "empty path";
    for (std::size_t i = 0; i < path.size(); ++i) {
      Vertex v = path[i];
      if (v < 0 || v >= g.order()) return "vertex out of range";
      if (seen[static_cast<std::size_t>(v)]) return "vertex " + std::to_string(v) + " covered twice";
      seen[static_cast<std::size_t>(v)] = 1;
      if (i > 0 && !g.adjacent(path[i - 1], v)) {
        return "non-edge " + std::to_string(path[i - 1]) + "-" + std::to_string(v) + " in path";
      }
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!seen[static_cast<std::size_t>(v)]) return "vertex " + std::to_string(v) + " uncovered";
  }
  return std::nullopt;
}

std::optional<std::string> check_cycle_cover(const Graph& g, const CycleCover& cover) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (const auto& cycle : cover.cycles) {
    if (cycle.empty()) return "empty cycle";
    std::vector<char> here(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : cycle) {
      if (v < 0 || v >= g.order()) return "vertex out of range";
      if (here[static_cast<std::size_t>(v)]) return "cycle repeats vertex " + std::to_string(v);
      here[static_cast<std::size_t>(v)] = 1;
      seen[static_cast<std::size_t>(v)] = 1;
    }
    if (cycle.size() == 2 && !g.adjacent(cycle[0], cycle[1])) return "degenerate edge-cycle on a non-edge";
    if (cycle.size() >= 3) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (!g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()])) return "cycle uses a non-edge";
      }
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!seen[static_cast<std::size_t>(v)]) return "vertex " + std::to_string(v) + " uncovered";
  }
  return std::nullopt;
}

void canonicalize(PathCover& cover) {
  for (auto& p : cover.paths) {
    if (p.size() > 1 && p.back() < p.front()) std::reverse(p.begin(), p.end());
  }
  std::sort(cover.paths.begin(), cover.paths.end());
}

namespace {

// ---------------------------------------------------------------------------
// Path cover: DFS over (covered, open path end, paths used), failed states
// memoized. Each component of the uncovered part needs its own path, which
// bounds how many components may remain.

class PathCoverSearch {
 public:
  PathCoverSearch(const Graph& g, int k, BudgetMeter& meter)
      : g_(g), k_(k), meter_(meter), n_(g.order()), all_(g.vertex_mask()), memo_(n_ <= 50) {}

  Verdict run() { return idle(0, 0); }

  PathCover cover() const {
    PathCover c{paths_};
    canonicalize(c);
    return c;
  }

 private:
  Mask key(Vertex end, int used, Mask covered) const {
    return covered | (Mask{static_cast<std::uint64_t>(end + 1)} << n_) |
           (Mask{static_cast<std::uint64_t>(used)} << (n_ + 7));
  }

  Verdict idle(Mask covered, int used) {
    if (covered == all_) return Verdict::yes;
    if (used == k_) return Verdict::no;
    if (!meter_.tick()) return Verdict::unknown;
    const Mask k = key(-1, used, covered);
    if (memo_ && failed_.contains(k)) return Verdict::no;
    const Mask open = all_ & ~covered;
    if (detail::count_components(g_, open) <= k_ - used) {
      for (Mask m = open; m; m &= m - 1) {
        Vertex u = detail::lowest(m);
        paths_.push_back({u});
        Verdict r = extending(u, covered | bit(u), used + 1);
        if (r != Verdict::no) return r;
        paths_.pop_back();
      }
    }
    if (memo_) failed_.insert(k);
    return Verdict::no;
  }

  Verdict extending(Vertex v, Mask covered, int used) {
    if (covered == all_) return Verdict::yes;
    if (!meter_.tick()) return Verdict::unknown;
    const Mask k = key(v, used, covered);
    if (memo_ && failed_.contains(k)) return Verdict::no;
    const Mask open = all_ & ~covered;
    int components = 0;
    bool touches = false;
    detail::for_each_component(g_, open, [&](Mask comp) {
      ++components;
      touches = touches || (comp & g_.neighbor_mask(v)) != 0;
      return true;
    });
    if (components - (touches ? 1 : 0) <= k_ - used) {
      for (Mask m = g_.neighbor_mask(v) & open; m; m &= m - 1) {
        Vertex w = detail::lowest(m);
        paths_.back().push_back(w);
        Verdict r = extending(w, covered | bit(w), used);
        if (r != Verdict::no) return r;
        paths_.back().pop_back();
      }
      Verdict r = idle(covered, used);
      if (r != Verdict::no) return r;
    }
    if (memo_) failed_.insert(k);
    return Verdict::no;
  }

  const Graph& g_;
  int k_;
  BudgetMeter& meter_;
  int n_;
  Mask all_;
  bool memo_;
  detail::StateSet failed_;
  std::vector<std::vector<Vertex>> paths_;
};

std::optional<int> counting_lower_bound(const Graph& g) {
  auto parts = bipartition(g);
  if (!parts) return std::nullopt;
  return std::abs(static_cast<int>(parts->side_a.size()) - static_cast<int>(parts->side_b.size()));
}

PathCoverDecision decide_path_cover(const Graph& g, int k, BudgetMeter& meter, PathCoverOptions options) {
  PathCoverDecision d;
  if (k < 1) {
    d.verdict = g.order() == 0 ? Verdict::yes : Verdict::no;
    if (d.verdict == Verdict::yes) d.cover = PathCover{};
    return d;
  }
  if (options.counting_prune) {
    if (auto lb = counting_lower_bound(g); lb && *lb > k) {
      d.verdict = Verdict::no;
      d.by_counting = true;
      return d;
    }
  }
  PathCoverSearch search(g, k, meter);
  d.verdict = search.run();
  if (d.verdict == Verdict::yes) d.cover = search.cover();
  return d;
}

// ---------------------------------------------------------------------------
// Cycle cover. ends[S] holds the vertices v such that some path from
// lowest(S) to v visits exactly S; S is a cycle set when |S| >= 3 and such a
// v is adjacent to lowest(S). Only inclusion-maximal coverable sets (cycles,
// edges, single vertices) matter for a cover.

class CycleSets {
 public:
  CycleSets(const Graph& g, BudgetMeter& meter) : g_(g), n_(g.order()) {
    const std::size_t total = std::size_t{1} << n_;
    ends_.assign(total, 0);
    for (Vertex s = 0; s < n_; ++s) ends_[bit(s)] = static_cast<std::uint32_t>(bit(s));
    std::vector<char> coverable(total, 0);
    for (std::size_t s = 1; s < total; ++s) {
      if (!meter.tick()) {
        complete_ = false;
        return;
      }
      const Mask set = s;
      const Vertex low = detail::lowest(set);
      for (Mask e = ends_[s]; e; e &= e - 1) {
        Vertex v = detail::lowest(e);
        for (Mask w = g.neighbor_mask(v) & ~set & ~(bit(low + 1) - 1); w; w &= w - 1) {
          ends_[set | bit(detail::lowest(w))] |= static_cast<std::uint32_t>(bit(detail::lowest(w)));
        }
      }
      const int size = std::popcount(set);
      if (size == 1) {
        coverable[s] = 1;
      } else if (size == 2) {
        coverable[s] = g.adjacent(low, detail::lowest(set & (set - 1)));
      } else {
        coverable[s] = (ends_[s] & g.neighbor_mask(low)) != 0;
      }
    }
    // dominated[S]: some coverable superset of S exists (S itself included).
    std::vector<char> dominated(total, 0);
    for (std::size_t s = total; s-- > 1;) {
      bool sup = false;
      for (Vertex w = 0; w < n_ && !sup; ++w) {
        if (!(s & bit(w))) sup = dominated[s | bit(w)] != 0;
      }
      dominated[s] = coverable[s] || sup;
      if (coverable[s] && !sup) maximal_.push_back(s);
    }
    std::sort(maximal_.begin(), maximal_.end(), [](Mask a, Mask b) {
      int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa > pb : a < b;
    });
  }

  bool complete() const { return complete_; }
  const std::vector<Mask>& maximal() const { return maximal_; }

  std::vector<Vertex> cycle_for(Mask set) const {
    const int size = std::popcount(set);
    if (size <= 2) return detail::vertices_of(set);
    const Vertex low = detail::lowest(set);
    Vertex v = detail::lowest(ends_[set] & g_.neighbor_mask(low));
    std::vector<Vertex> seq{v};
    Mask cur = set;
    while (cur != bit(low)) {
      Mask prev = cur & ~bit(v);
      Mask cand = ends_[prev] & g_.neighbor_mask(v);
      v = detail::lowest(cand);
      seq.push_back(v);
      cur = prev;
    }
    std::reverse(seq.begin(), seq.end());
    return seq;
  }

 private:
  const Graph& g_;
  int n_;
  bool complete_ = true;
  std::vector<std::uint32_t> ends_;
  std::vector<Mask> maximal_;
};

class SetCoverSearch {
 public:
  SetCoverSearch(const std::vector<Mask>& sets, int n, BudgetMeter& meter) : meter_(meter), n_(n) {
    by_vertex_.resize(static_cast<std::size_t>(n));
    for (Mask s : sets) {
      for (Mask m = s; m; m &= m - 1) by_vertex_[static_cast<std::size_t>(detail::lowest(m))].push_back(s);
      largest_ = std::max(largest_, std::popcount(s));
    }
  }

  Verdict run(Mask uncovered, int k) {
    if (uncovered == 0) return Verdict::yes;
    if (k == 0 || k * largest_ < std::popcount(uncovered)) return Verdict::no;
    if (!meter_.tick()) return Verdict::unknown;
    const Mask key = uncovered | (Mask{static_cast<std::uint64_t>(k)} << n_);
    if (failed_.contains(key)) return Verdict::no;
    for (Mask s : by_vertex_[static_cast<std::size_t>(detail::lowest(uncovered))]) {
      chosen_.push_back(s);
      Verdict r = run(uncovered & ~s, k - 1);
      if (r != Verdict::no) return r;
      chosen_.pop_back();
    }
    failed_.insert(key);
    return Verdict::no;
  }

  const std::vector<Mask>& chosen() const { return chosen_; }

 private:
  BudgetMeter& meter_;
  int n_;
  int largest_ = 0;
  std::vector<std::vector<Mask>> by_vertex_;
  std::vector<Mask> chosen_;
  detail::StateSet failed_;
};

CycleCoverDecision decide_cycle_cover(const Graph& g, int k, const CycleSets& sets, BudgetMeter& meter) {
  CycleCoverDecision d;
  SetCoverSearch search(sets.maximal(), g.order(), meter);
  d.verdict = search.run(g.vertex_mask(), k);
  if (d.verdict == Verdict::yes) {
    CycleCover cover;
    for (Mask s : search.chosen()) cover.cycles.push_back(sets.cycle_for(s));
    d.cover = std::move(cover);
  }
  return d;
}

void require_cycle_order(const Graph& g) {
  if (g.order() > kMaxCycleCoverOrder) {
    throw std::invalid_argument("cycle cover search supports at most " + std::to_string(kMaxCycleCoverOrder) +
                                " vertices");
  }
}

}  // namespace

PathCoverDecision disjoint_path_cover(const Graph& g, int k, const Budget& budget, PathCoverOptions options) {
  require_mask_order(g, "disjoint_path_cover");
  BudgetMeter meter(budget);
  return decide_path_cover(g, k, meter, options);
}

CoverNumber path_cover_number(const Graph& g, const Budget& budget, PathCoverOptions options) {
  require_mask_order(g, "path_cover_number");
  BudgetMeter meter(budget);
  CoverNumber out;
  int k = 1;
  if (options.counting_prune) {
    if (auto lb = counting_lower_bound(g)) k = std::max(k, *lb);
  }
  for (; k <= std::max(1, g.order()); ++k) {
    out.lower_bound = k;
    auto d = decide_path_cover(g, k, meter, options);
    if (d.verdict == Verdict::yes) {
      out.value = k;
      out.path_witness = std::move(d.cover);
      return out;
    }
    if (d.verdict == Verdict::unknown) return out;
  }
  throw std::logic_error("path_cover_number: n singleton paths always cover");
}

CycleCoverDecision cycle_cover(const Graph& g, int k, const Budget& budget) {
  require_cycle_order(g);
  BudgetMeter meter(budget);
  CycleSets sets(g, meter);
  if (!sets.complete()) return {};
  return decide_cycle_cover(g, k, sets, meter);
}

CoverNumber cycle_cover_number(const Graph& g, const Budget& budget) {
  require_cycle_order(g);
  BudgetMeter meter(budget);
  CoverNumber out;
  CycleSets sets(g, meter);
  if (!sets.complete()) return out;
  for (int k = 1; k <= std::max(1, g.order()); ++k) {
    out.lower_bound = k;
    auto d = decide_cycle_cover(g, k, sets, meter);
    if (d.verdict == Verdict::yes) {
      out.value = k;
      out.cycle_witness = std::move(d.cover);
      return out;
    }
    if (d.verdict == Verdict::unknown) return out;
  }
  throw std::logic_error("cycle_cover_number: n degenerate cycles always cover");
}

}  // namespace sgc
