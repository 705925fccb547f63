#pragma once

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "stppr/backward_search.hpp"
#include "stppr/exact.hpp"
#include "stppr/forward_search.hpp"
#include "stppr/io_util.hpp"
#include "stppr/metrics.hpp"
#include "stppr/monte_carlo.hpp"
#include "stppr/oracle_cache.hpp"
#include "stppr/rbs.hpp"
#include "stppr/sampling.hpp"

namespace stppr {

// Accuracy/cost sweep of one method over its knob: eps for the push
// baselines, delta/eps for the estimator modes, walk count for sampling,
// iteration count for the exact method. Query nodes are shared across the
// sweep so points are comparable.
struct TradeoffOptions {
  std::string method = "rbs-relative";  // power|bs|fs|mc|rbs-relative|rbs-additive
  std::vector<double> sweep;
  int num_query_nodes = 20;
  QuerySampling sampling = QuerySampling::DegreeWeighted;
  std::uint64_t seed = 0;
  double alpha = 0.2;
  std::size_t precision_k = 50;
  int boost = 1;
  bool theoretical_theta = false;
  std::string cache_dir;          // ground-truth cache location; empty recomputes
  bool record_wall = true;        // false writes 0 so files are byte-stable
  int truth_iters = 0;            // 0 means the default for alpha
};

struct TradeoffRow {
  std::string method;
  double param;
  std::string metric;
  double value;
  double mean_edge_touches;
  double mean_wall_ms;
};

namespace detail {

inline bool method_is_source_side(const std::string& m) { return m == "fs" || m == "mc"; }

inline bool method_known(const std::string& m) {
  return m == "power" || m == "bs" || m == "fs" || m == "mc" || m == "rbs-relative" ||
         m == "rbs-additive";
}

}  // namespace detail

inline std::vector<TradeoffRow> run_tradeoff(const Graph& g, const TradeoffOptions& opt) {
  if (!detail::method_known(opt.method))
    throw std::invalid_argument("unknown tradeoff method: " + opt.method);
  if (opt.sweep.empty()) throw std::invalid_argument("tradeoff sweep is empty");
  check_alpha(opt.alpha);
  const std::size_t k = std::min<std::size_t>(opt.precision_k, g.num_nodes());
  const int iters = opt.truth_iters > 0 ? opt.truth_iters : default_ground_truth_iters(opt.alpha);

  std::vector<NodeId> queries = sample_query_nodes(g, opt.sampling, opt.num_query_nodes, opt.seed);
  OracleCache oracle(opt.cache_dir);
  const bool source_side = detail::method_is_source_side(opt.method);

  // ground truth per distinct query node
  std::vector<DenseVector> truth;
  truth.reserve(queries.size());
  for (NodeId q : queries)
    truth.push_back(source_side ? oracle.single_source(g, q, opt.alpha, iters)
                                : oracle.single_target(g, q, opt.alpha, iters));

  std::vector<TradeoffRow> rows;
  for (std::size_t pi = 0; pi < opt.sweep.size(); ++pi) {
    double param = opt.sweep[pi];
    double sum_err = 0.0, sum_prec = 0.0, sum_touch = 0.0, sum_wall = 0.0;
    for (std::size_t qi = 0; qi < queries.size(); ++qi) {
      NodeId q = queries[qi];
      std::uint64_t run_seed = derive_seed(opt.seed, pi + 1, qi + 1);
      ScoreVector est;
      QueryStats stats;
      if (opt.method == "power") {
        DenseVector v = power_single_target(g, q, opt.alpha, int(param));
        for (NodeId u = 0; u < g.num_nodes(); ++u)
          if (v.values[u] != 0.0) est.set(u, v.values[u]);
        stats.edge_touches = std::uint64_t(param) * g.num_edges();
      } else if (opt.method == "bs") {
        BsResult r = backward_search(g, q, opt.alpha, param);
        est = std::move(r.reserves);
        stats = r.stats;
      } else if (opt.method == "fs") {
        FsResult r = forward_search(g, q, opt.alpha, param);
        est = std::move(r.reserves);
        stats = r.stats;
      } else if (opt.method == "mc") {
        McResult r = monte_carlo_single_source(g, q, opt.alpha, std::uint64_t(param), run_seed);
        est = std::move(r.estimate);
        stats = r.stats;
      } else {
        RbsConfig cfg = opt.method == "rbs-relative"
                            ? RbsConfig::relative(opt.theoretical_theta
                                                      ? theoretical_relative_theta(param, opt.alpha)
                                                      : param,
                                                  run_seed, opt.alpha)
                            : RbsConfig::additive(opt.theoretical_theta
                                                      ? theoretical_additive_theta(param, opt.alpha)
                                                      : param,
                                                  run_seed, opt.alpha);
        cfg.boost = opt.boost;
        BoostedResult r = rbs_boosted(g, q, cfg);
        est = std::move(r.estimate);
        stats = r.stats;
      }
      sum_err += max_additive_err(truth[qi], est);
      sum_prec += precision_at_k(truth[qi], est, k);
      sum_touch += double(stats.edge_touches);
      sum_wall += stats.wall_ms;
    }
    double nq = double(queries.size());
    double mean_touch = sum_touch / nq;
    double mean_wall = opt.record_wall ? sum_wall / nq : 0.0;
    rows.push_back({opt.method, param, "max_additive_err", sum_err / nq, mean_touch, mean_wall});
    rows.push_back({opt.method, param, "precision@" + std::to_string(k), sum_prec / nq,
                    mean_touch, mean_wall});
  }
  return rows;
}

inline void write_tradeoff_csv(const std::vector<TradeoffRow>& rows, std::ostream& out,
                               const nlohmann::json& config_echo) {
  if (!config_echo.is_null()) out << "# " << config_echo.dump() << '\n';
  out << "method,param,metric_name,metric_value,edge_touches,wall_ms\n";
  for (const TradeoffRow& r : rows)
    out << r.method << ',' << format_double(r.param) << ',' << r.metric << ','
        << format_double(r.value) << ',' << format_double(r.mean_edge_touches) << ','
        << format_double(r.mean_wall_ms) << '\n';
}

}  // namespace stppr
