#pragma once

#include <chrono>
#include <cstdint>

#include <json.hpp>

namespace stppr {

// Work counters shared by all query algorithms. edge_touches charges one
// unit per adjacency entry examined (for random walks: per step), which is
// the unit the cost bounds are stated in. Wall time is informational only.
struct QueryStats {
  std::uint64_t push_count = 0;
  std::uint64_t edge_touches = 0;
  double wall_ms = 0.0;

  QueryStats& operator+=(const QueryStats& o) {
    push_count += o.push_count;
    edge_touches += o.edge_touches;
    wall_ms += o.wall_ms;
    return *this;
  }

  nlohmann::json to_json(bool record_wall = true) const {
    return nlohmann::json{{"push_count", push_count},
                          {"edge_touches", edge_touches},
                          {"wall_ms", record_wall ? wall_ms : 0.0}};
  }
};

class WallTimer {
 public:
  WallTimer() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace stppr
