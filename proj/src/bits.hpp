#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "sgc/graph.hpp"

namespace sgc::detail {

using Mask = std::uint64_t;

inline Mask bit(Vertex v) { return Mask{1} << v; }

inline Vertex lowest(Mask m) { return std::countr_zero(m); }

inline std::vector<Vertex> vertices_of(Mask m) {
  std::vector<Vertex> out;
  for (; m; m &= m - 1) out.push_back(lowest(m));
  return out;
}

inline Mask mask_of(const std::vector<Vertex>& vs) {
  Mask m = 0;
  for (Vertex v : vs) m |= bit(v);
  return m;
}

/// Vertices of `within` reachable from `seeds` (a subset of `within`)
/// through `within`.
inline Mask closure(const Graph& g, Mask seeds, Mask within) {
  Mask seen = seeds & within;
  Mask frontier = seen;
  while (frontier) {
    Vertex x = lowest(frontier);
    frontier &= frontier - 1;
    Mask fresh = g.neighbor_mask(x) & within & ~seen;
    seen |= fresh;
    frontier |= fresh;
  }
  return seen;
}

/// Calls f(component) for each connected component of g[within]; stops early
/// when f returns false. Returns false if stopped.
template <class F>
bool for_each_component(const Graph& g, Mask within, F&& f) {
  while (within) {
    Mask comp = closure(g, bit(lowest(within)), within);
    if (!f(comp)) return false;
    within &= ~comp;
  }
  return true;
}

inline int count_components(const Graph& g, Mask within) {
  int count = 0;
  for_each_component(g, within, [&](Mask) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace sgc::detail
