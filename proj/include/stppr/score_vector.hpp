#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stppr/graph.hpp"

namespace stppr {

// Sparse node -> score map. Absent nodes read as 0.
class ScoreVector {
 public:
  using Map = std::unordered_map<NodeId, double>;

  double value(NodeId u) const {
    auto it = map_.find(u);
    return it == map_.end() ? 0.0 : it->second;
  }

  void add(NodeId u, double x) { map_[u] += x; }
  void set(NodeId u, double x) { map_[u] = x; }
  void erase(NodeId u) { map_.erase(u); }
  void scale(double f) {
    for (auto& [u, x] : map_) {
      (void)u;
      x *= f;
    }
  }

  bool empty() const { return map_.empty(); }
  std::size_t support() const { return map_.size(); }

  double sum() const {
    double s = 0.0;
    for (auto& [u, x] : map_) {
      (void)u;
      s += x;
    }
    return s;
  }

  // Entries ordered by node id; the canonical order for output and for any
  // iteration whose float accumulation order must be reproducible.
  std::vector<std::pair<NodeId, double>> sorted_entries() const {
    std::vector<std::pair<NodeId, double>> out(map_.begin(), map_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  Map::const_iterator begin() const { return map_.begin(); }
  Map::const_iterator end() const { return map_.end(); }

  void clear() { map_.clear(); }

 private:
  Map map_;
};

// Which PPR slice a dense length-n vector holds: scores out of one source,
// or scores into one target.
enum class VectorView { SourceRow, TargetColumn };

struct DenseVector {
  VectorView view = VectorView::SourceRow;
  std::vector<double> values;

  static DenseVector zeros(std::size_t n, VectorView view) {
    return DenseVector{view, std::vector<double>(n, 0.0)};
  }

  double operator[](std::size_t i) const { return values[i]; }
  double& operator[](std::size_t i) { return values[i]; }
  std::size_t size() const { return values.size(); }
};

}  // namespace stppr
