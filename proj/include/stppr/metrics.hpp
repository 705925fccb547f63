#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "stppr/graph.hpp"
#include "stppr/score_vector.hpp"

namespace stppr {

// Largest absolute deviation over the whole node universe; estimate entries
// missing from the sparse side read as 0.
inline double max_additive_err(const DenseVector& truth, const ScoreVector& est) {
  std::vector<double> diff(truth.values);
  for (auto& [node, x] : est) {
    if (node >= diff.size())
      throw std::invalid_argument("max_additive_err: estimate node outside truth universe");
    diff[node] -= x;
  }
  double worst = 0.0;
  for (double d : diff) worst = std::max(worst, std::abs(d));
  return worst;
}

namespace detail {

// Node order used for rankings: score descending, node id ascending on ties.
inline std::vector<NodeId> top_k_nodes(const std::vector<double>& scores, std::size_t k) {
  std::vector<NodeId> order(scores.size());
  std::iota(order.begin(), order.end(), NodeId(0));
  std::partial_sort(order.begin(), order.begin() + std::ptrdiff_t(k), order.end(),
                    [&](NodeId a, NodeId b) {
                      if (scores[a] != scores[b]) return scores[a] > scores[b];
                      return a < b;
                    });
  order.resize(k);
  return order;
}

}  // namespace detail

// Fraction of the true top-k recovered by the estimated top-k.
inline double precision_at_k(const DenseVector& truth, const ScoreVector& est, std::size_t k) {
  if (k == 0) throw std::invalid_argument("precision_at_k: k must be >= 1");
  if (k > truth.values.size())
    throw std::invalid_argument("precision_at_k: k exceeds node count");
  std::vector<double> est_dense(truth.values.size(), 0.0);
  for (auto& [node, x] : est) {
    if (node >= est_dense.size())
      throw std::invalid_argument("precision_at_k: estimate node outside truth universe");
    est_dense[node] = x;
  }
  std::vector<NodeId> t = detail::top_k_nodes(truth.values, k);
  std::vector<NodeId> e = detail::top_k_nodes(est_dense, k);
  std::unordered_set<NodeId> tset(t.begin(), t.end());
  std::size_t hit = 0;
  for (NodeId v : e) hit += tset.count(v);
  return double(hit) / double(k);
}

// Balanced set-recovery score; 0 by convention when both precision and
// recall vanish.
inline double f1_score(const std::vector<NodeId>& truth_set,
                       const std::vector<NodeId>& est_set) {
  std::unordered_set<NodeId> tset(truth_set.begin(), truth_set.end());
  std::unordered_set<NodeId> eset(est_set.begin(), est_set.end());
  std::size_t inter = 0;
  for (NodeId v : eset) inter += tset.count(v);
  double precision = eset.empty() ? 0.0 : double(inter) / double(eset.size());
  double recall = tset.empty() ? 0.0 : double(inter) / double(tset.size());
  if (precision + recall == 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

}  // namespace stppr
