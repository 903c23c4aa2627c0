#pragma once

#include <cstdint>

#include "sgc/graph.hpp"

namespace sgc {

/// K_{a,b}; side A is 0..a-1, side B is a..a+b-1.
BipartiteGraph complete_bipartite(int a, int b);

enum class StandardKind { path, cycle, complete };

/// P_n, C_n (n >= 3) or K_n with the obvious labeling.
Graph standard_graph(StandardKind kind, int n);
inline Graph path_graph(int n) { return standard_graph(StandardKind::path, n); }
inline Graph cycle_graph(int n) { return standard_graph(StandardKind::cycle, n); }
inline Graph complete_graph(int n) { return standard_graph(StandardKind::complete, n); }

/// Hub 0 joined to every vertex of the cycle 1..rim.
Graph wheel_graph(int rim);

inline constexpr int kRandomConnectedAttempts = 10'000;

/// G(n, p) conditioned on connectivity by rejection sampling; deterministic in
/// (n, p, seed). Throws std::runtime_error after kRandomConnectedAttempts
/// disconnected samples.
Graph random_connected(int n, double p, std::uint64_t seed);

}  // namespace sgc
