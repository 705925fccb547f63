#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "stppr/graph.hpp"
#include "stppr/rng.hpp"

namespace stppr {

// Query nodes are drawn with replacement. Degree weighting (by in+out
// degree) mirrors how workloads concentrate on well-connected nodes;
// Uniform is the neutral alternative.
enum class QuerySampling { DegreeWeighted, Uniform };

inline QuerySampling parse_sampling(const std::string& s) {
  if (s == "degree" || s == "degree_weighted") return QuerySampling::DegreeWeighted;
  if (s == "uniform") return QuerySampling::Uniform;
  throw std::invalid_argument("unknown sampling mode: " + s);
}

inline std::vector<NodeId> sample_query_nodes(const Graph& g, QuerySampling mode, int count,
                                              std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("sample count must be >= 1");
  SplitMix64 rng(derive_seed(seed, 0x5a4dULL));
  std::vector<NodeId> out;
  out.reserve(std::size_t(count));
  if (mode == QuerySampling::Uniform) {
    for (int i = 0; i < count; ++i) out.push_back(rng.next_below(g.num_nodes()));
    return out;
  }
  std::vector<double> cum(g.num_nodes());
  double acc = 0.0;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    acc += double(g.in_degree(v)) + double(g.out_degree(v));
    cum[v] = acc;
  }
  if (acc == 0.0) throw std::invalid_argument("cannot degree-sample an edgeless graph");
  for (int i = 0; i < count; ++i) {
    double x = rng.next_unit() * acc;
    auto it = std::lower_bound(cum.begin(), cum.end(), x);
    out.push_back(NodeId(it - cum.begin()));
  }
  return out;
}

}  // namespace stppr
