#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "stppr/graph.hpp"
#include "stppr/rbs.hpp"

namespace stppr {

// A node s is reported when its estimated contribution to t clears
// phi * n * pr(t), where pr(t) is t's PageRank (n * pr(t) equals the column
// sum of exact contributions). Absolute hits clear the band with the c
// margin; values inside the closed band [(1-c)..(1+c)] * phi * n * pr(t)
// are only permissible, i.e. acceptable either way.
enum class HitterClass { Absolute, Permissible };

struct HeavyHitterConfig {
  double phi = 1e-2;   // contribution threshold, in (0,1)
  double c = 0.1;      // band half-width, in (0,1)
  double n_pi_t = 0.0; // n * pr(t); supplied by the caller or an oracle
};

struct HeavyHitter {
  NodeId node;
  double estimate;
  HitterClass cls;
};

struct HeavyHitterResult {
  std::vector<HeavyHitter> hitters;  // estimate descending, node id tiebreak
  double threshold = 0.0;            // phi * n * pr(t)
  QueryStats stats;
};

// Single-target contribution detection: one estimator run at relative floor
// delta = c * phi * n * pr(t) separates everything that matters by more
// than the band width.
inline HeavyHitterResult heavy_hitters(const Graph& g, NodeId t, const HeavyHitterConfig& hh,
                                       const RbsConfig& base) {
  if (!(hh.phi > 0.0 && hh.phi < 1.0)) throw std::invalid_argument("phi must be in (0,1)");
  if (!(hh.c > 0.0 && hh.c < 1.0)) throw std::invalid_argument("c must be in (0,1)");
  if (!(hh.n_pi_t > 0.0)) throw std::invalid_argument("n*pr(t) must be > 0");

  RbsConfig cfg = base;
  cfg.mode = RbsMode::Relative;
  cfg.scaling = RbsScaling::Unit;
  cfg.theta = hh.c * hh.phi * hh.n_pi_t;
  BoostedResult est = rbs_boosted(g, t, cfg);

  HeavyHitterResult res;
  res.threshold = hh.phi * hh.n_pi_t;
  res.stats = est.stats;
  const double upper = (1.0 + hh.c) * res.threshold;
  for (auto [node, x] : est.estimate.sorted_entries()) {
    if (x < res.threshold) continue;
    res.hitters.push_back(
        {node, x, x > upper ? HitterClass::Absolute : HitterClass::Permissible});
  }
  std::sort(res.hitters.begin(), res.hitters.end(), [](const auto& a, const auto& b) {
    if (a.estimate != b.estimate) return a.estimate > b.estimate;
    return a.node < b.node;
  });
  return res;
}

}  // namespace stppr
