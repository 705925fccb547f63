#pragma once

#include <cstdint>
#include <deque>
#include <stdexcept>
#include <vector>

#include "stppr/exact.hpp"
#include "stppr/graph.hpp"
#include "stppr/query_stats.hpp"
#include "stppr/score_vector.hpp"

namespace stppr {

struct FsResult {
  ScoreVector reserves;   // approximate ppr(s, .)
  ScoreVector residues;   // unsettled walk mass per node
  QueryStats stats;
};

// Source-side residue propagation. Pushes u while residues[u]/d_out(u) > eps
// (a dangling node counts with denominator 1: it can still settle its alpha
// share, the rest of its mass vanishes). Maintains for every v
//   ppr(s,v) = reserves[v] + sum_u residues[u] * ppr(u,v).
// The final per-entry error is only bounded by eps*d_out(v) on undirected
// graphs; no uniform additive guarantee exists on directed ones.
inline FsResult forward_search(const Graph& g, NodeId s, double alpha, double eps) {
  check_alpha(alpha);
  if (s >= g.num_nodes()) throw std::invalid_argument("source out of range");
  if (eps <= 0.0) throw std::invalid_argument("eps must be > 0");

  WallTimer timer;
  FsResult res;
  res.residues.set(s, 1.0);

  auto ratio_of = [&](NodeId u, double r) {
    std::uint32_t d = g.out_degree(u);
    return d == 0 ? r : r / double(d);
  };

  std::deque<NodeId> fifo;
  std::vector<std::uint8_t> queued(g.num_nodes(), 0);
  auto enqueue = [&](NodeId u) {
    if (!queued[u]) {
      queued[u] = 1;
      fifo.push_back(u);
    }
  };
  if (ratio_of(s, 1.0) > eps) enqueue(s);

  while (!fifo.empty()) {
    NodeId u = fifo.front();
    fifo.pop_front();
    queued[u] = 0;
    double r = res.residues.value(u);
    if (ratio_of(u, r) <= eps) continue;
    res.reserves.add(u, alpha * r);
    res.residues.erase(u);
    auto out = g.out_neighbors(u);
    if (!out.empty()) {
      double inc = (1.0 - alpha) * r / double(out.size());
      for (NodeId v : out) {
        res.residues.add(v, inc);
        if (ratio_of(v, res.residues.value(v)) > eps) enqueue(v);
      }
    }
    ++res.stats.push_count;
    res.stats.edge_touches += out.size();
  }

  res.stats.wall_ms = timer.elapsed_ms();
  return res;
}

}  // namespace stppr
