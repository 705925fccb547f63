#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "stppr/exact.hpp"
#include "stppr/graph.hpp"
#include "stppr/query_stats.hpp"
#include "stppr/rng.hpp"
#include "stppr/score_vector.hpp"

namespace stppr {

// Error regime the estimator is tuned for. Relative pairs with unit
// per-node scaling and theta = delta (the relative-error floor); Additive
// pairs with sqrt(out-degree) scaling and theta = eps. The pairing is fixed:
// each mode's guarantee is proved only for its own scaling.
enum class RbsMode { Relative, Additive };
enum class RbsScaling { Unit, SqrtOutDeg };

inline RbsScaling scaling_for(RbsMode mode) {
  return mode == RbsMode::Relative ? RbsScaling::Unit : RbsScaling::SqrtOutDeg;
}

struct RbsConfig {
  double alpha = 0.2;
  RbsMode mode = RbsMode::Relative;
  RbsScaling scaling = RbsScaling::Unit;
  double theta = 1e-3;
  std::optional<int> level_override;  // replaces the derived hop cutoff L
  std::uint64_t seed = 0;
  int boost = 1;  // independent repetitions combined by per-hop medians; odd

  static RbsConfig relative(double delta, std::uint64_t seed = 0, double alpha = 0.2) {
    RbsConfig c;
    c.alpha = alpha;
    c.mode = RbsMode::Relative;
    c.scaling = RbsScaling::Unit;
    c.theta = delta;
    c.seed = seed;
    return c;
  }

  static RbsConfig additive(double eps, std::uint64_t seed = 0, double alpha = 0.2) {
    RbsConfig c;
    c.alpha = alpha;
    c.mode = RbsMode::Additive;
    c.scaling = RbsScaling::SqrtOutDeg;
    c.theta = eps;
    c.seed = seed;
    return c;
  }

  void validate() const {
    check_alpha(alpha);
    if (theta <= 0.0) throw std::invalid_argument("rbs: theta must be > 0");
    if (scaling != scaling_for(mode))
      throw std::invalid_argument("rbs: mode/scaling pairing violated");
    if (boost < 1 || boost % 2 == 0)
      throw std::invalid_argument("rbs: boost must be a positive odd count");
    if (level_override && *level_override < 0)
      throw std::invalid_argument("rbs: level override must be >= 0");
  }

  // Hops processed: walks longer than L carry mass below theta and are
  // truncated. theta >= 1 degenerates to L = 0 and the estimate {t: alpha}.
  int levels() const {
    if (level_override) return *level_override;
    if (theta >= 1.0) return 0;
    double raw = std::log(theta) / std::log(1.0 - alpha);
    return std::max(0, int(std::ceil(raw)));
  }
};

// Guarantee-backed theta for a target relative error of 1/10 above delta.
// theta and the hop cutoff depend on each other; a few fixed-point rounds
// settle it.
inline double theoretical_relative_theta(double delta, double alpha = 0.2) {
  check_alpha(alpha);
  if (delta <= 0.0) throw std::invalid_argument("delta must be > 0");
  const double eps_r = 0.1;
  double theta = delta;
  for (int round = 0; round < 4; ++round) {
    double L = std::max(1.0, std::ceil(std::log(theta) / std::log(1.0 - alpha)));
    theta = eps_r * eps_r * delta / (3.0 * L);
  }
  return theta;
}

// Guarantee-backed theta for additive error eps (variance over hops summed,
// Chebyshev at 1/3 failure per entry before boosting).
inline double theoretical_additive_theta(double eps, double alpha = 0.2) {
  check_alpha(alpha);
  if (eps <= 0.0) throw std::invalid_argument("eps must be > 0");
  double theta = eps;
  for (int round = 0; round < 4; ++round) {
    double L = std::max(1.0, std::ceil(std::log(theta) / std::log(1.0 - alpha)));
    theta = eps / std::sqrt(3.0 * L * alpha);
  }
  return theta;
}

// Per-hop estimates, hop l in levels[l].
struct HopTable {
  std::vector<ScoreVector> levels;

  int max_level() const { return int(levels.size()) - 1; }

  ScoreVector sum() const {
    ScoreVector total;
    for (const ScoreVector& lvl : levels)
      for (auto& [node, x] : lvl) total.add(node, x);
    return total;
  }
};

struct RbsResult {
  HopTable hops;
  ScoreVector estimate;
  QueryStats stats;
};

namespace detail {

// One push of hop-l mass val at node v into the next hop table. The sorted
// in-list makes both acceptance predicates prefix conditions, so each phase
// is a scan that stops at its first failure (which is still charged as a
// touch). One uniform r, keyed by (seed, level, v), is shared by the whole
// random phase of this push.
inline void rbs_push(const Graph& g, NodeId v, double val, int level, const RbsConfig& cfg,
                     ScoreVector& next, QueryStats& stats) {
  ++stats.push_count;
  auto in = g.in_neighbors(v);
  if (in.empty()) return;
  const double base = (1.0 - cfg.alpha) * val;
  const double at = cfg.alpha * cfg.theta;
  const bool unit = cfg.scaling == RbsScaling::Unit;

  double det_bound = base / at;
  if (!unit) det_bound *= det_bound;
  std::size_t i = 0;
  for (; i < in.size(); ++i) {
    ++stats.edge_touches;
    if (double(in[i].out_degree) > det_bound) break;
    next.add(in[i].node, base / double(in[i].out_degree));
  }
  if (i == in.size()) return;  // whole list accepted deterministically

  double r = unit_open_at(cfg.seed, std::uint64_t(level), v);
  double rand_bound = base / (r * at);
  if (!unit) rand_bound *= rand_bound;
  for (std::size_t j = i; j < in.size(); ++j) {
    ++stats.edge_touches;
    if (double(in[j].out_degree) > rand_bound) break;
    double inc = unit ? at : at / std::sqrt(double(in[j].out_degree));
    next.add(in[j].node, inc);
  }
}

}  // namespace detail

// Single-target estimator. Hop 0 holds exactly {t: alpha}; hop l+1 is built
// by pushing every nonzero hop-l entry through its in-list, taking small
// increments deterministically below the degree threshold and extending the
// accepted prefix randomly (but unbiasedly) above it. The returned estimate
// is the sum over hops; each per-hop entry is an unbiased estimate of the
// exact hop-l score.
inline RbsResult rbs_single_target(const Graph& g, NodeId t, const RbsConfig& cfg) {
  cfg.validate();
  if (t >= g.num_nodes()) throw std::invalid_argument("target out of range");

  WallTimer timer;
  const int L = cfg.levels();
  RbsResult res;
  res.hops.levels.resize(std::size_t(L) + 1);
  res.hops.levels[0].set(t, cfg.alpha);

  // Level entries are visited in node order so that accumulation order, and
  // with it every output bit, is reproducible.
  std::vector<std::pair<NodeId, double>> cur{{t, cfg.alpha}};
  for (int level = 0; level < L && !cur.empty(); ++level) {
    ScoreVector next;
    for (auto [v, val] : cur) detail::rbs_push(g, v, val, level, cfg, next, res.stats);
    cur = next.sorted_entries();
    res.hops.levels[std::size_t(level) + 1] = std::move(next);
  }

  res.estimate = res.hops.sum();
  res.stats.wall_ms = timer.elapsed_ms();
  return res;
}

namespace detail {

inline std::uint64_t boost_seed(std::uint64_t seed, int rep) {
  // rep 0 reuses the base seed so boost = 1 reproduces the plain run exactly
  return rep == 0 ? seed : derive_seed(seed, 0xb005ULL, std::uint64_t(rep));
}

}  // namespace detail

struct BoostedResult {
  ScoreVector estimate;
  QueryStats stats;  // summed over repetitions
};

// Median-of-runs noise suppression: the per-node median is taken within
// each hop across cfg.boost independent runs (missing entries count as 0),
// then hop medians are summed. Even counts are rejected rather than
// silently rounded, since an even-count median would be a different
// estimator.
inline BoostedResult rbs_boosted(const Graph& g, NodeId t, const RbsConfig& cfg) {
  cfg.validate();
  const int k = cfg.boost;
  if (k == 1) {
    RbsResult one = rbs_single_target(g, t, cfg);
    return BoostedResult{std::move(one.estimate), one.stats};
  }

  std::vector<HopTable> runs;
  runs.reserve(std::size_t(k));
  BoostedResult res;
  for (int rep = 0; rep < k; ++rep) {
    RbsConfig c = cfg;
    c.boost = 1;
    c.seed = detail::boost_seed(cfg.seed, rep);
    RbsResult r = rbs_single_target(g, t, c);
    res.stats += r.stats;
    runs.push_back(std::move(r.hops));
  }

  std::size_t max_levels = 0;
  for (const HopTable& h : runs) max_levels = std::max(max_levels, h.levels.size());
  std::vector<double> vals(static_cast<std::size_t>(k), 0.0);
  for (std::size_t l = 0; l < max_levels; ++l) {
    ScoreVector support;
    for (const HopTable& h : runs)
      if (l < h.levels.size())
        for (auto& [node, x] : h.levels[l]) {
          (void)x;
          support.set(node, 1.0);
        }
    for (auto [node, mark] : support.sorted_entries()) {
      (void)mark;
      for (int rep = 0; rep < k; ++rep)
        vals[std::size_t(rep)] =
            l < runs[std::size_t(rep)].levels.size() ? runs[std::size_t(rep)].levels[l].value(node) : 0.0;
      std::nth_element(vals.begin(), vals.begin() + k / 2, vals.end());
      double med = vals[std::size_t(k) / 2];
      if (med != 0.0) res.estimate.add(node, med);
    }
  }
  return res;
}

}  // namespace stppr
