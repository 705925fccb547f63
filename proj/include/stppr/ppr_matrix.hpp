#pragma once

#include <algorithm>
#include <cstring>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "stppr/backward_search.hpp"
#include "stppr/forward_search.hpp"
#include "stppr/graph.hpp"
#include "stppr/io_util.hpp"
#include "stppr/rbs.hpp"

namespace stppr {

enum class MatrixMethod { RbsAdditive, BackwardSearch, ForwardSearch };

inline MatrixMethod parse_matrix_method(const std::string& s) {
  if (s == "rbs") return MatrixMethod::RbsAdditive;
  if (s == "bs") return MatrixMethod::BackwardSearch;
  if (s == "fs") return MatrixMethod::ForwardSearch;
  throw std::invalid_argument("unknown matrix method: " + s);
}

struct PprMatrixOptions {
  double alpha = 0.2;
  double eps = 1e-3;           // per-entry budget the method is run at
  double drop_threshold = -1;  // entries below this are omitted; < 0 means eps
  MatrixMethod method = MatrixMethod::RbsAdditive;
  int workers = 1;
  std::uint64_t seed = 0;
  int boost = 1;
  bool theoretical_theta = false;  // run at the guarantee-backed theta instead of eps

  double drop() const { return drop_threshold < 0 ? eps : drop_threshold; }
};

// All-pairs approximation stored row-major by source. Rows keep entries
// sorted by estimate descending (node id tiebreak). Built target-side for
// the single-target methods, so one column query scatters into n rows.
struct PprMatrix {
  std::vector<std::vector<std::pair<NodeId, double>>> rows;
  double eps = 0.0;
  QueryStats build_stats;

  double value(NodeId s, NodeId t) const {
    for (auto& [node, x] : rows[s])
      if (node == t) return x;
    return 0.0;
  }
};

namespace detail {

inline void sort_row(std::vector<std::pair<NodeId, double>>& row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
}

// Static partition over query nodes; each slot is owned by exactly one
// worker, so the merged result is independent of scheduling.
template <class Fn>
void parallel_over_nodes(NodeId n, int workers, Fn&& per_node) {
  int w = std::max(1, workers);
  if (w == 1) {
    for (NodeId q = 0; q < n; ++q) per_node(q);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(std::size_t(w));
  for (int i = 0; i < w; ++i)
    pool.emplace_back([&, i] {
      for (NodeId q = NodeId(i); q < n; q += NodeId(w)) per_node(q);
    });
  for (auto& th : pool) th.join();
}

}  // namespace detail

inline PprMatrix build_ppr_matrix(const Graph& g, const PprMatrixOptions& opt) {
  check_alpha(opt.alpha);
  if (opt.eps <= 0.0) throw std::invalid_argument("matrix eps must be > 0");
  const NodeId n = g.num_nodes();
  WallTimer timer;

  PprMatrix mat;
  mat.eps = opt.eps;
  mat.rows.resize(n);

  // per-query staging keyed by the query node; filled concurrently but
  // merged in a fixed order afterwards
  std::vector<std::vector<std::pair<NodeId, double>>> staged(n);
  std::vector<QueryStats> staged_stats(n);
  const double drop = opt.drop();

  auto run_query = [&](NodeId q) {
    std::vector<std::pair<NodeId, double>>& slot = staged[q];
    if (opt.method == MatrixMethod::ForwardSearch) {
      FsResult r = forward_search(g, q, opt.alpha, opt.eps);
      staged_stats[q] = r.stats;
      for (auto [node, x] : r.reserves.sorted_entries())
        if (x >= drop) slot.emplace_back(node, x);
    } else if (opt.method == MatrixMethod::BackwardSearch) {
      BsResult r = backward_search(g, q, opt.alpha, opt.eps);
      staged_stats[q] = r.stats;
      for (auto [node, x] : r.reserves.sorted_entries())
        if (x >= drop) slot.emplace_back(node, x);
    } else {
      RbsConfig cfg = RbsConfig::additive(
          opt.theoretical_theta ? theoretical_additive_theta(opt.eps, opt.alpha) : opt.eps,
          derive_seed(opt.seed, 0x6d61ULL, q), opt.alpha);
      cfg.boost = opt.boost;
      BoostedResult r = rbs_boosted(g, q, cfg);
      staged_stats[q] = r.stats;
      for (auto [node, x] : r.estimate.sorted_entries())
        if (x >= drop) slot.emplace_back(node, x);
    }
  };
  detail::parallel_over_nodes(n, opt.workers, run_query);

  if (opt.method == MatrixMethod::ForwardSearch) {
    for (NodeId s = 0; s < n; ++s) mat.rows[s] = std::move(staged[s]);
  } else {
    for (NodeId t = 0; t < n; ++t)
      for (auto [s, x] : staged[t]) mat.rows[s].emplace_back(t, x);
  }
  for (NodeId s = 0; s < n; ++s) detail::sort_row(mat.rows[s]);
  for (NodeId q = 0; q < n; ++q) mat.build_stats += staged_stats[q];
  mat.build_stats.wall_ms = timer.elapsed_ms();
  return mat;
}

// "s,t,value" rows ordered (s asc, value desc, t asc); the in-memory row
// order, flattened.
inline void save_ppr_matrix_csv(const PprMatrix& mat, std::ostream& out,
                                const std::string& header_comment = "") {
  if (!header_comment.empty()) out << "# " << header_comment << '\n';
  out << "s,t,value\n";
  for (NodeId s = 0; s < mat.rows.size(); ++s)
    for (auto [t, x] : mat.rows[s])
      out << s << ',' << t << ',' << format_double(x) << '\n';
}

struct PprMatrixCacheIo {
  static constexpr std::uint32_t kMagic = 0x53504d58;  // "XMPS"
  static constexpr std::uint32_t kVersion = 1;

  static void save(const PprMatrix& mat, const std::string& path) {
    std::string buf;
    auto put = [&buf](const auto& x) {
      buf.append(reinterpret_cast<const char*>(&x), sizeof(x));
    };
    put(kMagic);
    put(kVersion);
    put(std::uint64_t(mat.rows.size()));
    put(mat.eps);
    for (auto& row : mat.rows) {
      put(std::uint64_t(row.size()));
      for (auto [t, x] : row) {
        put(t);
        put(x);
      }
    }
    write_file_atomic(path, buf);
  }

  static PprMatrix load(const std::string& path) {
    std::string buf = read_file(path);
    std::size_t pos = 0;
    auto get = [&buf, &pos](auto& x) {
      if (pos + sizeof(x) > buf.size()) throw std::runtime_error("matrix cache truncated");
      std::memcpy(&x, buf.data() + pos, sizeof(x));
      pos += sizeof(x);
    };
    std::uint32_t magic = 0, version = 0;
    get(magic);
    get(version);
    if (magic != kMagic || version != kVersion)
      throw std::runtime_error("not a matrix cache file: " + path);
    PprMatrix mat;
    std::uint64_t n = 0;
    get(n);
    get(mat.eps);
    mat.rows.resize(n);
    for (auto& row : mat.rows) {
      std::uint64_t len = 0;
      get(len);
      row.resize(len);
      for (auto& [t, x] : row) {
        get(t);
        get(x);
      }
    }
    return mat;
  }
};

}  // namespace stppr
