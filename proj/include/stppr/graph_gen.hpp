#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stppr/graph.hpp"
#include "stppr/rng.hpp"

namespace stppr {

enum class GraphKind { Complete, Cycle, StarIn, ErdosRenyi, BaPowerlaw };

struct GenOptions {
  GraphKind kind = GraphKind::Cycle;
  NodeId n = 2;
  double p = 0.0;        // ErdosRenyi edge probability
  std::uint32_t k = 1;   // BaPowerlaw attachments per new node
  std::uint64_t seed = 0;
};

inline GraphKind parse_graph_kind(const std::string& s) {
  if (s == "complete") return GraphKind::Complete;
  if (s == "cycle") return GraphKind::Cycle;
  if (s == "star_in") return GraphKind::StarIn;
  if (s == "erdos_renyi") return GraphKind::ErdosRenyi;
  if (s == "ba_powerlaw") return GraphKind::BaPowerlaw;
  throw std::invalid_argument("unknown graph kind: " + s);
}

// Deterministic synthetic graphs for tests and experiments. Every family is
// a plain function of (parameters, seed).
inline Graph generate_graph(const GenOptions& opt) {
  if (opt.n < 1) throw std::invalid_argument("generate_graph: n must be >= 1");
  std::vector<std::pair<NodeId, NodeId>> edges;
  switch (opt.kind) {
    case GraphKind::Complete:
      for (NodeId u = 0; u < opt.n; ++u)
        for (NodeId v = 0; v < opt.n; ++v)
          if (u != v) edges.emplace_back(u, v);
      break;
    case GraphKind::Cycle:
      for (NodeId u = 0; u < opt.n; ++u) edges.emplace_back(u, (u + 1) % opt.n);
      break;
    case GraphKind::StarIn:
      // hub is node 0; every leaf points at it, the hub is dangling
      for (NodeId u = 1; u < opt.n; ++u) edges.emplace_back(u, NodeId(0));
      break;
    case GraphKind::ErdosRenyi: {
      if (opt.p < 0.0 || opt.p > 1.0)
        throw std::invalid_argument("generate_graph: p must be in [0,1]");
      SplitMix64 rng(derive_seed(opt.seed, 0x47454eULL));
      for (NodeId u = 0; u < opt.n; ++u)
        for (NodeId v = 0; v < opt.n; ++v)
          if (u != v && rng.next_unit() < opt.p) edges.emplace_back(u, v);
      break;
    }
    case GraphKind::BaPowerlaw: {
      if (opt.k < 1) throw std::invalid_argument("generate_graph: k must be >= 1");
      if (opt.n <= opt.k)
        throw std::invalid_argument("generate_graph: ba_powerlaw needs n > k");
      SplitMix64 rng(derive_seed(opt.seed, 0x4241ULL));
      // preferential attachment via the repeated-endpoints pool; edges are
      // added in both directions so out-degrees follow the power law too
      std::vector<NodeId> pool;
      for (NodeId u = 0; u < opt.k; ++u)
        for (NodeId v = 0; v < opt.k; ++v)
          if (u != v) {
            edges.emplace_back(u, v);
            pool.push_back(u);
          }
      if (pool.empty()) pool.push_back(0);  // k == 1 starts from a single node
      for (NodeId w = opt.k; w < opt.n; ++w) {
        std::vector<NodeId> picked;
        std::size_t attempts = 0;
        while (picked.size() < opt.k && attempts < 64 * opt.k) {
          NodeId c = pool[rng.next_below(std::uint32_t(pool.size()))];
          ++attempts;
          if (std::find(picked.begin(), picked.end(), c) == picked.end())
            picked.push_back(c);
        }
        for (NodeId c : picked) {
          edges.emplace_back(w, c);
          edges.emplace_back(c, w);
          pool.push_back(c);
          pool.push_back(w);
        }
      }
      break;
    }
  }
  return Graph::from_edges(opt.n, edges);
}

}  // namespace stppr
