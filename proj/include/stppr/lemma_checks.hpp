#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stppr/exact.hpp"
#include "stppr/graph.hpp"
#include "stppr/rbs.hpp"

namespace stppr {

// Statistical audit of the estimator's three contracts on a concrete
// (graph, target, config):
//   mean:     per-hop estimates are unbiased for the exact hop scores
//   variance: per-hop variance stays under theta*score (unit scaling)
//             or alpha*theta^2 (sqrt scaling)
//   cost:     expected touches stay under sum_u lambda(u)*ppr(u,t)/(alpha*theta)
// Distribution-free slacks: means are allowed 4 standard errors (computed
// from the variance bound, which only widens the band), sample variance 30%
// sampling noise, cost 20%. All slacks are echoed in the report.
struct LemmaCheck {
  std::string name;
  double bound = 0.0;
  double observed = 0.0;
  bool pass = false;
  nlohmann::json details;
};

struct LemmaReport {
  std::vector<LemmaCheck> checks;
  bool all_pass = false;
  nlohmann::json config;

  nlohmann::json to_json() const {
    nlohmann::json out;
    out["config"] = config;
    out["all_pass"] = all_pass;
    out["checks"] = nlohmann::json::array();
    for (const LemmaCheck& c : checks) {
      nlohmann::json jc{{"name", c.name},
                        {"bound", c.bound},
                        {"observed", c.observed},
                        {"pass", c.pass}};
      if (!c.details.is_null()) jc["details"] = c.details;
      out["checks"].push_back(jc);
    }
    return out;
  }
};

struct LemmaCheckOptions {
  int trials = 2000;
  double tracked_floor = 1e-4;  // hop entries below this are too small to test
  double mean_sigmas = 4.0;
  double variance_slack = 1.3;
  double cost_slack = 1.2;
  int truth_iters = 0;  // 0 means default for alpha
};

inline LemmaReport verify_lemmas(const Graph& g, NodeId t, const RbsConfig& cfg,
                                 const LemmaCheckOptions& opt = {}) {
  cfg.validate();
  if (t >= g.num_nodes()) throw std::invalid_argument("target out of range");
  if (opt.trials < 2) throw std::invalid_argument("need at least 2 trials");
  if (cfg.boost != 1)
    throw std::invalid_argument("lemma checks audit the raw estimator; boost must be 1");

  const int L = cfg.levels();
  const int iters =
      opt.truth_iters > 0 ? opt.truth_iters : default_ground_truth_iters(cfg.alpha);
  std::vector<DenseVector> hop_truth = hop_ppr_single_target(g, t, cfg.alpha, L);
  DenseVector full_truth = power_single_target(g, t, cfg.alpha, iters);
  const bool unit = cfg.scaling == RbsScaling::Unit;

  // tracked (hop, node) cells with Welford accumulators, so identical trials
  // report a sample variance of exactly zero
  struct Cell {
    double truth;
    double mean = 0.0;
    double m2 = 0.0;
  };
  std::map<std::pair<int, NodeId>, Cell> cells;
  for (int l = 0; l <= L; ++l)
    for (NodeId s = 0; s < g.num_nodes(); ++s)
      if (hop_truth[std::size_t(l)][s] > opt.tracked_floor)
        cells[{l, s}] = Cell{hop_truth[std::size_t(l)][s]};

  double touch_sum = 0.0;
  for (int trial = 0; trial < opt.trials; ++trial) {
    RbsConfig c = cfg;
    c.seed = derive_seed(cfg.seed, 0x7472ULL, std::uint64_t(trial));
    RbsResult r = rbs_single_target(g, t, c);
    touch_sum += double(r.stats.edge_touches);
    for (auto& [key, cell] : cells) {
      double x = key.first < int(r.hops.levels.size())
                     ? r.hops.levels[std::size_t(key.first)].value(key.second)
                     : 0.0;
      double delta = x - cell.mean;
      cell.mean += delta / double(trial + 1);
      cell.m2 += delta * (x - cell.mean);
    }
  }

  const double n = double(opt.trials);
  auto var_bound = [&](const Cell& cell) {
    return unit ? cfg.theta * cell.truth : cfg.alpha * cfg.theta * cfg.theta;
  };

  LemmaReport rep;
  rep.config = {{"alpha", cfg.alpha},
                {"mode", cfg.mode == RbsMode::Relative ? "relative" : "additive"},
                {"scaling", unit ? "unit" : "sqrt_out_degree"},
                {"theta", cfg.theta},
                {"levels", L},
                {"seed", cfg.seed},
                {"trials", opt.trials},
                {"tracked_floor", opt.tracked_floor},
                {"tracked_cells", cells.size()},
                {"mean_sigmas", opt.mean_sigmas},
                {"variance_slack", opt.variance_slack},
                {"cost_slack", opt.cost_slack}};

  // mean: worst deviation measured in allowed band widths
  {
    LemmaCheck c;
    c.name = "unbiased_hop_means";
    double worst = 0.0;
    std::pair<int, NodeId> worst_key{-1, 0};
    for (auto& [key, cell] : cells) {
      double band = opt.mean_sigmas * std::sqrt(var_bound(cell) / n);
      double dev = std::abs(cell.mean - cell.truth);
      double ratio = band > 0.0 ? dev / band : (dev == 0.0 ? 0.0 : HUGE_VAL);
      if (ratio > worst) {
        worst = ratio;
        worst_key = key;
      }
    }
    c.bound = 1.0;
    c.observed = worst;
    c.pass = worst <= 1.0;
    c.details = {{"worst_hop", worst_key.first}, {"worst_node", worst_key.second}};
    rep.checks.push_back(std::move(c));
  }

  // variance: worst sample variance relative to its slacked bound
  {
    LemmaCheck c;
    c.name = unit ? "variance_under_theta_times_score" : "variance_under_alpha_theta_sq";
    double worst = 0.0;
    std::pair<int, NodeId> worst_key{-1, 0};
    for (auto& [key, cell] : cells) {
      double svar = cell.m2 / (n - 1.0);
      double allowed = opt.variance_slack * var_bound(cell);
      double ratio = svar / allowed;
      if (ratio > worst) {
        worst = ratio;
        worst_key = key;
      }
    }
    c.bound = 1.0;
    c.observed = worst;
    c.pass = worst <= 1.0;
    c.details = {{"worst_hop", worst_key.first}, {"worst_node", worst_key.second}};
    rep.checks.push_back(std::move(c));
  }

  // cost: mean touches against the scaled contribution mass
  {
    LemmaCheck c;
    c.name = "expected_cost_bound";
    double mass = 0.0;
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
      double lam = unit ? 1.0 : std::sqrt(double(g.out_degree(u)));
      mass += lam * full_truth[u];
    }
    c.bound = opt.cost_slack * mass / (cfg.alpha * cfg.theta);
    c.observed = touch_sum / n;
    c.pass = c.observed <= c.bound;
    c.details = {{"scaled_contribution_mass", mass}};
    rep.checks.push_back(std::move(c));
  }

  rep.all_pass = true;
  for (const LemmaCheck& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
  return rep;
}

}  // namespace stppr
