#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "stppr/graph.hpp"
#include "stppr/score_vector.hpp"

namespace stppr {

// Walk model used throughout: at every step the walk stops where it stands
// with probability alpha, otherwise moves to a uniform random out-neighbor;
// at a dangling node the non-stopping mass vanishes. ppr(s,t) is the
// probability that a walk started at s stops at t.

inline void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("alpha must be in (0,1)");
}

// Iterations needed to push the truncation error below 1e-7.
inline int default_ground_truth_iters(double alpha) {
  check_alpha(alpha);
  return int(std::ceil(std::log(1e-7) / std::log(1.0 - alpha)));
}

// Truncated power iteration from one source. After `iters` rounds the entry
// for t equals the probability of stopping at t within the first `iters`
// steps, so the truncation error is one-sided and at most (1-alpha)^iters.
// Negative iters means the 1e-7 default for this alpha.
inline DenseVector power_single_source(const Graph& g, NodeId s, double alpha, int iters = -1) {
  check_alpha(alpha);
  if (s >= g.num_nodes()) throw std::invalid_argument("source out of range");
  if (iters < 0) iters = default_ground_truth_iters(alpha);
  std::vector<double> cur(g.num_nodes(), 0.0), next(g.num_nodes(), 0.0);
  for (int it = 0; it < iters; ++it) {
    std::fill(next.begin(), next.end(), 0.0);
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
      if (cur[u] == 0.0) continue;
      auto out = g.out_neighbors(u);
      if (out.empty()) continue;
      double w = (1.0 - alpha) * cur[u] / double(out.size());
      for (NodeId v : out) next[v] += w;
    }
    next[s] += alpha;
    cur.swap(next);
  }
  return DenseVector{VectorView::SourceRow, std::move(cur)};
}

// Same truncated sum organized by target: entry s approximates ppr(s,t).
// One round is a pull over out-edges since walks into t are traversed
// backwards.
inline DenseVector power_single_target(const Graph& g, NodeId t, double alpha, int iters = -1) {
  check_alpha(alpha);
  if (t >= g.num_nodes()) throw std::invalid_argument("target out of range");
  if (iters < 0) iters = default_ground_truth_iters(alpha);
  std::vector<double> cur(g.num_nodes(), 0.0), next(g.num_nodes(), 0.0);
  for (int it = 0; it < iters; ++it) {
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
      auto out = g.out_neighbors(u);
      if (out.empty()) {
        next[u] = 0.0;
        continue;
      }
      double acc = 0.0;
      for (NodeId v : out) acc += cur[v];
      next[u] = (1.0 - alpha) * acc / double(out.size());
    }
    next[t] += alpha;
    cur.swap(next);
  }
  return DenseVector{VectorView::TargetColumn, std::move(cur)};
}

// Exact hop decomposition: result[l][s] is the probability that a walk from
// s stops at t at exactly hop l. Summing l = 0..L gives the truncated PPR,
// with tail mass in [0, (1-alpha)^(L+1)].
inline std::vector<DenseVector> hop_ppr_single_target(const Graph& g, NodeId t, double alpha,
                                                      int levels) {
  check_alpha(alpha);
  if (t >= g.num_nodes()) throw std::invalid_argument("target out of range");
  if (levels < 0) throw std::invalid_argument("levels must be >= 0");
  std::vector<DenseVector> hops;
  hops.reserve(std::size_t(levels) + 1);
  DenseVector cur = DenseVector::zeros(g.num_nodes(), VectorView::TargetColumn);
  cur[t] = alpha;
  hops.push_back(cur);
  for (int l = 0; l < levels; ++l) {
    DenseVector next = DenseVector::zeros(g.num_nodes(), VectorView::TargetColumn);
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
      auto out = g.out_neighbors(u);
      if (out.empty()) continue;
      double acc = 0.0;
      for (NodeId v : out) acc += cur[v];
      next[u] = (1.0 - alpha) * acc / double(out.size());
    }
    hops.push_back(next);
    cur = std::move(next);
  }
  return hops;
}

}  // namespace stppr
