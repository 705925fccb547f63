#pragma once

// Shared fixtures and independent reference computations for the test
// suites. Reference code here deliberately takes a different path from the
// library (source-side walk-distribution DP vs target-side pulls) so the
// two cannot share a bug.

#include <cmath>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "stppr/graph.hpp"
#include "stppr/graph_gen.hpp"
#include "stppr/score_vector.hpp"

namespace testutil {

using stppr::Graph;
using stppr::NodeId;

inline Graph from_edges(NodeId n, std::vector<std::pair<NodeId, NodeId>> edges) {
  return Graph::from_edges(n, edges);
}

// 0 -> 1 -> 0
inline Graph two_cycle() { return from_edges(2, {{0, 1}, {1, 0}}); }

inline Graph cycle(NodeId n) {
  return stppr::generate_graph({stppr::GraphKind::Cycle, n, 0.0, 1, 0});
}

// hub 0, leaves point at it
inline Graph star_in(NodeId n) {
  return stppr::generate_graph({stppr::GraphKind::StarIn, n, 0.0, 1, 0});
}

inline Graph er(NodeId n, double p, std::uint64_t seed) {
  return stppr::generate_graph({stppr::GraphKind::ErdosRenyi, n, p, 1, seed});
}

inline Graph ba(NodeId n, std::uint32_t k, std::uint64_t seed) {
  return stppr::generate_graph({stppr::GraphKind::BaPowerlaw, n, 0.0, k, seed});
}

inline Graph complete(NodeId n) {
  return stppr::generate_graph({stppr::GraphKind::Complete, n, 0.0, 1, 0});
}

// Undirected path 0 - 1 - ... - n-1 (both edge directions stored).
inline Graph undirected_path(NodeId n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId i = 0; i + 1 < n; ++i) {
    edges.emplace_back(i, i + 1);
    edges.emplace_back(i + 1, i);
  }
  return from_edges(n, edges);
}

// Undirected star: hub 0 and n-1 leaves, both directions stored.
inline Graph undirected_star(NodeId n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId i = 1; i < n; ++i) {
    edges.emplace_back(i, NodeId(0));
    edges.emplace_back(NodeId(0), i);
  }
  return from_edges(n, edges);
}

// Reference PPR by forward simulation of the walk distribution: carry the
// location distribution of a live walk from s and bank the alpha share at
// every node each step. Truncation after `steps` leaves at most
// (1-alpha)^steps unbanked.
inline std::vector<double> reference_ppr_row(const Graph& g, NodeId s, double alpha,
                                             int steps = 400) {
  std::vector<double> live(g.num_nodes(), 0.0), banked(g.num_nodes(), 0.0);
  live[s] = 1.0;
  for (int step = 0; step < steps; ++step) {
    std::vector<double> next(g.num_nodes(), 0.0);
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
      if (live[u] == 0.0) continue;
      banked[u] += alpha * live[u];
      auto out = g.out_neighbors(u);
      if (out.empty()) continue;
      double w = (1.0 - alpha) * live[u] / double(out.size());
      for (NodeId v : out) next[v] += w;
    }
    live.swap(next);
  }
  return banked;
}

// Same banked mass split by the hop at which the walk stops.
inline std::vector<std::vector<double>> reference_hop_rows(const Graph& g, NodeId s,
                                                           double alpha, int levels) {
  std::vector<std::vector<double>> rows;
  std::vector<double> live(g.num_nodes(), 0.0);
  live[s] = 1.0;
  for (int l = 0; l <= levels; ++l) {
    std::vector<double> bank(g.num_nodes(), 0.0);
    for (NodeId u = 0; u < g.num_nodes(); ++u) bank[u] = alpha * live[u];
    rows.push_back(bank);
    std::vector<double> next(g.num_nodes(), 0.0);
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
      if (live[u] == 0.0) continue;
      auto out = g.out_neighbors(u);
      if (out.empty()) continue;
      double w = (1.0 - alpha) * live[u] / double(out.size());
      for (NodeId v : out) next[v] += w;
    }
    live.swap(next);
  }
  return rows;
}

// Frozen closed forms for the 2-cycle at alpha = 1/5, from the geometric
// series over round trips: stopping at the start node sums alpha*(1-alpha)^2j
// = alpha/(1-(1-alpha)^2) = 5/9, at the other node 4/9.
constexpr double kTwoCycleSelf = 5.0 / 9.0;
constexpr double kTwoCycleCross = 4.0 / 9.0;

// Leaf-to-hub score on star_in at alpha = 1/5: one forced step then stop,
// (1-alpha)*alpha.
constexpr double kStarLeafToHub = 0.16;

}  // namespace testutil
