#pragma once

#include <cstdint>
#include <stdexcept>

#include "stppr/exact.hpp"
#include "stppr/graph.hpp"
#include "stppr/query_stats.hpp"
#include "stppr/rng.hpp"
#include "stppr/score_vector.hpp"

namespace stppr {

struct McResult {
  ScoreVector estimate;  // fraction of walks stopped at each node
  QueryStats stats;      // edge_touches counts walk steps
};

// Plain walk simulation from one source. Each walk draws its stream from
// (seed, walk index), so the result is independent of execution order and
// walks can be partitioned across workers without changing the output.
// Per step the stop coin is drawn first, then the neighbor; a walk that
// fails the stop coin on a dangling node vanishes and scores nowhere.
inline McResult monte_carlo_single_source(const Graph& g, NodeId s, double alpha,
                                          std::uint64_t walks, std::uint64_t seed) {
  check_alpha(alpha);
  if (s >= g.num_nodes()) throw std::invalid_argument("source out of range");
  if (walks == 0) throw std::invalid_argument("walks must be > 0");

  WallTimer timer;
  McResult res;
  for (std::uint64_t w = 0; w < walks; ++w) {
    SplitMix64 rng(derive_seed(seed, w));
    NodeId cur = s;
    while (true) {
      if (rng.next_unit() < alpha) {
        res.estimate.add(cur, 1.0);
        break;
      }
      auto out = g.out_neighbors(cur);
      if (out.empty()) break;  // vanished
      cur = out[rng.next_below(std::uint32_t(out.size()))];
      ++res.stats.edge_touches;
    }
  }
  res.estimate.scale(1.0 / double(walks));
  res.stats.wall_ms = timer.elapsed_ms();
  return res;
}

}  // namespace stppr
