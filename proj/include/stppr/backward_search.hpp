#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "stppr/exact.hpp"
#include "stppr/graph.hpp"
#include "stppr/query_stats.hpp"
#include "stppr/score_vector.hpp"

namespace stppr {

// Which node to push next. Fifo is the default; MaxFirst always pushes the
// largest residue, matching the textbook statement of the algorithm. Both
// end in states satisfying the same residue bound.
enum class BsQueuePolicy { Fifo, MaxFirst };

// Read-only view of the in-progress state, handed to the observer after
// every push so invariants can be checked mid-run.
struct BsStateView {
  const ScoreVector& reserves;
  const ScoreVector& residues;
  const QueryStats& stats;
  std::uint64_t pushes_done;
};

struct BsOptions {
  double alpha = 0.2;
  double eps = 1e-4;
  BsQueuePolicy queue = BsQueuePolicy::Fifo;
  std::function<void(const BsStateView&)> observer;  // optional
};

struct BsResult {
  ScoreVector reserves;   // lower bounds: reserves[s] <= ppr(s,t) <= reserves[s] + eps
  ScoreVector residues;   // all strictly above eps consumed on termination
  QueryStats stats;
};

// Residue propagation toward a single target. Maintains for every s
//   ppr(s,t) = reserves[s] + sum_u residues[u] * ppr(s,u)
// and stops once every residue is at most eps. With eps >= 1 the initial
// unit residue on t is already settled, so the trivial state comes back
// (no pushes, empty reserves).
inline BsResult backward_search(const Graph& g, NodeId t, const BsOptions& opt) {
  check_alpha(opt.alpha);
  if (t >= g.num_nodes()) throw std::invalid_argument("target out of range");
  if (opt.eps <= 0.0) throw std::invalid_argument("eps must be > 0");

  WallTimer timer;
  BsResult res;
  res.residues.set(t, 1.0);

  std::deque<NodeId> fifo;
  using HeapItem = std::pair<double, NodeId>;
  std::priority_queue<HeapItem> heap;
  std::vector<std::uint8_t> queued(g.num_nodes(), 0);

  auto enqueue = [&](NodeId v, double r) {
    if (opt.queue == BsQueuePolicy::Fifo) {
      if (!queued[v]) {
        queued[v] = 1;
        fifo.push_back(v);
      }
    } else {
      // lazy heap: stale entries are skipped on pop because the residue was
      // zeroed by an earlier push
      heap.emplace(r, v);
    }
  };

  if (1.0 > opt.eps) enqueue(t, 1.0);

  auto pop = [&]() -> NodeId {
    if (opt.queue == BsQueuePolicy::Fifo) {
      NodeId v = fifo.front();
      fifo.pop_front();
      queued[v] = 0;
      return v;
    }
    NodeId v = heap.top().second;
    heap.pop();
    return v;
  };
  auto queue_empty = [&]() {
    return opt.queue == BsQueuePolicy::Fifo ? fifo.empty() : heap.empty();
  };

  while (!queue_empty()) {
    NodeId v = pop();
    double r = res.residues.value(v);
    if (r <= opt.eps) continue;  // stale heap entry or drained by accumulation
    res.reserves.add(v, opt.alpha * r);
    res.residues.erase(v);
    auto in = g.in_neighbors(v);
    for (const InEntry& e : in) {
      double inc = (1.0 - opt.alpha) * r / double(e.out_degree);
      res.residues.add(e.node, inc);
      double ru = res.residues.value(e.node);
      if (ru > opt.eps) enqueue(e.node, ru);
    }
    ++res.stats.push_count;
    res.stats.edge_touches += in.size();
    if (opt.observer)
      opt.observer(BsStateView{res.reserves, res.residues, res.stats, res.stats.push_count});
  }

  res.stats.wall_ms = timer.elapsed_ms();
  return res;
}

inline BsResult backward_search(const Graph& g, NodeId t, double alpha, double eps) {
  BsOptions opt;
  opt.alpha = alpha;
  opt.eps = eps;
  return backward_search(g, t, opt);
}

}  // namespace stppr
