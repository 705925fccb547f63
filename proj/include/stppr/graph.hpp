#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stppr/rng.hpp"

namespace stppr {

using NodeId = std::uint32_t;

// In-list entry: neighbor u together with u's out-degree, cached so pushes
// can test degree thresholds without touching u's adjacency.
struct InEntry {
  NodeId node;
  std::uint32_t out_degree;
  bool operator==(const InEntry&) const = default;
};

// Immutable directed multigraph in CSR form. Nodes are dense 0..n-1; an
// optional label table maps them back to the original external ids.
// Duplicate edges and self-loops are kept with multiplicity. Nodes with no
// outgoing edge are "dangling": random walks leaving them vanish, i.e. the
// corresponding transition-matrix row is all zero.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(NodeId n, const std::vector<std::pair<NodeId, NodeId>>& edges,
                          bool undirected_input = false,
                          std::vector<std::int64_t> labels = {}) {
    Graph g;
    g.n_ = n;
    g.m_ = edges.size();
    g.undirected_input_ = undirected_input;
    g.labels_ = std::move(labels);
    if (!g.labels_.empty() && g.labels_.size() != n)
      throw std::invalid_argument("graph: label table size does not match node count");

    std::vector<std::uint32_t> dout(n, 0), din(n, 0);
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) throw std::invalid_argument("graph: edge endpoint out of range");
      ++dout[u];
      ++din[v];
    }
    g.out_ptr_.assign(n + 1, 0);
    g.in_ptr_.assign(n + 1, 0);
    for (NodeId u = 0; u < n; ++u) {
      g.out_ptr_[u + 1] = g.out_ptr_[u] + dout[u];
      g.in_ptr_[u + 1] = g.in_ptr_[u] + din[u];
    }
    g.out_adj_.resize(g.m_);
    g.in_adj_.resize(g.m_);
    std::vector<std::uint64_t> opos(g.out_ptr_.begin(), g.out_ptr_.end() - 1);
    std::vector<std::uint64_t> ipos(g.in_ptr_.begin(), g.in_ptr_.end() - 1);
    // Both adjacency directions are filled in input edge order so the later
    // stable sort of the in-lists is stable with respect to the input.
    for (auto [u, v] : edges) {
      g.out_adj_[opos[u]++] = v;
      g.in_adj_[ipos[v]++] = InEntry{u, dout[u]};
    }
    sort_in_lists(g);
    return g;
  }

  NodeId num_nodes() const { return n_; }
  std::uint64_t num_edges() const { return m_; }

  std::uint32_t out_degree(NodeId u) const {
    return std::uint32_t(out_ptr_[u + 1] - out_ptr_[u]);
  }
  std::uint32_t in_degree(NodeId v) const {
    return std::uint32_t(in_ptr_[v + 1] - in_ptr_[v]);
  }

  std::span<const NodeId> out_neighbors(NodeId u) const {
    return {out_adj_.data() + out_ptr_[u], out_adj_.data() + out_ptr_[u + 1]};
  }

  // Sorted ascending by out_degree; ties keep input edge order.
  std::span<const InEntry> in_neighbors(NodeId v) const {
    return {in_adj_.data() + in_ptr_[v], in_adj_.data() + in_ptr_[v + 1]};
  }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::int64_t>& labels() const { return labels_; }
  std::int64_t label_of(NodeId u) const { return labels_.empty() ? std::int64_t(u) : labels_[u]; }

  bool undirected_input() const { return undirected_input_; }

  // Structure-only fingerprint (labels excluded); used to key oracle caches.
  std::uint64_t structural_hash() const {
    std::uint64_t h = mix64(std::uint64_t(n_) ^ (m_ << 20));
    for (std::uint64_t p : out_ptr_) h = mix64(h ^ p);
    for (NodeId v : out_adj_) h = mix64(h ^ v);
    return h;
  }

  // Checks the representation invariants; throws on the first violation.
  void validate() const {
    if (out_ptr_.size() != n_ + 1u || in_ptr_.size() != n_ + 1u)
      throw std::runtime_error("graph: bad pointer array size");
    if (out_ptr_.back() != m_ || in_ptr_.back() != m_)
      throw std::runtime_error("graph: edge count mismatch between directions");
    for (NodeId v = 0; v < n_; ++v) {
      auto in = in_neighbors(v);
      for (std::size_t i = 0; i < in.size(); ++i) {
        if (in[i].node >= n_) throw std::runtime_error("graph: in-entry node out of range");
        if (in[i].out_degree != out_degree(in[i].node))
          throw std::runtime_error("graph: stale out-degree in in-list");
        if (i > 0 && in[i - 1].out_degree > in[i].out_degree)
          throw std::runtime_error("graph: in-list not sorted by out-degree");
      }
    }
    // Every out edge must appear exactly once as an in entry and vice versa.
    std::unordered_map<std::uint64_t, std::int64_t> balance;
    for (NodeId u = 0; u < n_; ++u)
      for (NodeId v : out_neighbors(u)) ++balance[(std::uint64_t(u) << 32) | v];
    for (NodeId v = 0; v < n_; ++v)
      for (const InEntry& e : in_neighbors(v)) --balance[(std::uint64_t(e.node) << 32) | v];
    for (auto& [key, count] : balance) {
      (void)key;
      if (count != 0) throw std::runtime_error("graph: out/in adjacency mismatch");
    }
  }

  bool operator==(const Graph&) const = default;

  // Stable counting sort of every in-list by the cached out-degree,
  // O(n + m) total. Safe to call repeatedly; already-sorted lists are
  // left unchanged.
  friend void sort_in_lists(Graph& g) {
    if (g.m_ == 0) return;
    // Multi-edges can push an out-degree past n, so size the histogram by
    // the actual maximum.
    std::uint32_t maxd = 0;
    for (const InEntry& e : g.in_adj_) maxd = std::max(maxd, e.out_degree);
    std::vector<std::uint64_t> count(std::size_t(maxd) + 2, 0);
    for (const InEntry& e : g.in_adj_) ++count[e.out_degree + 1];
    for (std::size_t k = 1; k < count.size(); ++k) count[k] += count[k - 1];
    // Scatter the global entry stream (v-major, per-list order) by degree;
    // counting-sort stability keeps relative order within equal degrees.
    std::vector<InEntry> sorted(g.m_);
    std::vector<NodeId> owner_sorted(g.m_);
    std::vector<NodeId> owner(g.m_);
    for (NodeId v = 0; v < g.n_; ++v)
      for (std::uint64_t i = g.in_ptr_[v]; i < g.in_ptr_[v + 1]; ++i) owner[i] = v;
    for (std::uint64_t i = 0; i < g.m_; ++i) {
      std::uint64_t slot = count[g.in_adj_[i].out_degree]++;
      sorted[slot] = g.in_adj_[i];
      owner_sorted[slot] = owner[i];
    }
    std::vector<std::uint64_t> pos(g.in_ptr_.begin(), g.in_ptr_.end() - 1);
    for (std::uint64_t i = 0; i < g.m_; ++i) g.in_adj_[pos[owner_sorted[i]]++] = sorted[i];
  }

 private:
  NodeId n_ = 0;
  std::uint64_t m_ = 0;
  std::vector<std::uint64_t> out_ptr_{0};
  std::vector<std::uint64_t> in_ptr_{0};
  std::vector<NodeId> out_adj_;
  std::vector<InEntry> in_adj_;
  std::vector<std::int64_t> labels_;
  bool undirected_input_ = false;

  friend struct GraphCacheIo;
};

}  // namespace stppr
