#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sgc/graph.hpp"
#include "sgc/search.hpp"

namespace sgc {

struct IndependenceCertificate {
  int alpha = 0;
  std::vector<Vertex> witness;
  /// True when the search proved no larger independent set exists.
  bool exhaustive = false;
};

/// Maximum independent set by branch and bound with a greedy clique-cover
/// bound. On budget exhaustion the best set found so far is returned with
/// exhaustive = false. Requires n <= 64.
IndependenceCertificate independence_number(const Graph& g, const Budget& budget = {});

struct ConnectivityCertificate {
  int kappa = 0;
  /// Minimum separator; absent for complete graphs.
  std::optional<std::vector<Vertex>> separator;
  bool complete = false;
};

/// Exact vertex connectivity. kappa(K_n) = n - 1, kappa(K_1) = 0 and a
/// disconnected graph gets kappa = 0 with an empty separator.
ConnectivityCertificate vertex_connectivity(const Graph& g);

bool is_independent_set(const Graph& g, std::span<const Vertex> set);

/// True when deleting `set` leaves a disconnected graph.
bool is_separator(const Graph& g, std::span<const Vertex> set);

/// ceil(a / b) for positive b.
constexpr int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace sgc
