#pragma once

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "stppr/graph.hpp"
#include "stppr/io_util.hpp"
#include "stppr/ppr_matrix.hpp"
#include "stppr/rbs.hpp"

namespace stppr {

// Per-target hop-resolved estimates, the building block for measures that
// weight walk length. One estimator run per target; each target gets its
// own derived stream so the build is reproducible under any worker count.
struct HopIndex {
  double alpha = 0.2;
  std::map<NodeId, HopTable> tables;  // ordered for deterministic output
  QueryStats build_stats;
};

inline HopIndex build_hop_index(const Graph& g, const std::vector<NodeId>& targets,
                                const RbsConfig& base, int workers = 1) {
  base.validate();
  if (targets.empty()) throw std::invalid_argument("hop index needs at least one target");
  for (NodeId t : targets)
    if (t >= g.num_nodes()) throw std::invalid_argument("hop index target out of range");

  WallTimer timer;
  HopIndex idx;
  idx.alpha = base.alpha;

  std::vector<HopTable> slots(targets.size());
  std::vector<QueryStats> stats(targets.size());
  detail::parallel_over_nodes(NodeId(targets.size()), workers, [&](NodeId i) {
    RbsConfig cfg = base;
    cfg.seed = derive_seed(base.seed, 0x484fULL, targets[i]);
    RbsResult r = rbs_single_target(g, targets[i], cfg);
    slots[i] = std::move(r.hops);
    stats[i] = r.stats;
  });
  for (std::size_t i = 0; i < targets.size(); ++i) {
    idx.tables[targets[i]] = std::move(slots[i]);
    idx.build_stats += stats[i];
  }
  idx.build_stats.wall_ms = timer.elapsed_ms();
  return idx;
}

// "target,ell,node,value" ordered (target asc, ell asc, node asc).
inline void save_hop_index_csv(const HopIndex& idx, std::ostream& out,
                               const std::string& header_comment = "") {
  if (!header_comment.empty()) out << "# " << header_comment << '\n';
  out << "target,ell,node,value\n";
  for (auto& [t, table] : idx.tables)
    for (std::size_t l = 0; l < table.levels.size(); ++l)
      for (auto [node, x] : table.levels[l].sorted_entries())
        out << t << ',' << l << ',' << node << ',' << format_double(x) << '\n';
}

}  // namespace stppr
