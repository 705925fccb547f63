#pragma once

#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "stppr/graph.hpp"
#include "stppr/io_util.hpp"

namespace stppr {

enum class IdPolicy {
  Remap,        // arbitrary integer ids, remapped to dense 0..n-1 in first-seen order
  RequireDense  // ids taken as-is; must be non-negative, n = max id + 1
};

struct GraphSource {
  std::string path;
  bool undirected = false;
  char comment_prefix = '#';
  IdPolicy id_policy = IdPolicy::Remap;
};

namespace detail {

inline bool parse_int64(const std::string& tok, std::int64_t& out) {
  if (tok.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stoll(tok, &pos);
  } catch (...) {
    return false;
  }
  return pos == tok.size();
}

}  // namespace detail

// Whitespace-separated "u v" lines; blank lines and comment lines skipped.
// Malformed input reports the offending 1-based line number.
inline Graph load_graph(std::istream& in, const GraphSource& opt) {
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  std::string line;
  std::uint64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == opt.comment_prefix) continue;
    std::istringstream ls(line);
    std::string a, b, extra;
    ls >> a >> b;
    std::int64_t u, v;
    if (b.empty() || !detail::parse_int64(a, u) || !detail::parse_int64(b, v))
      throw std::runtime_error("edge list parse error at line " + std::to_string(lineno));
    if (ls >> extra)
      throw std::runtime_error("edge list parse error at line " + std::to_string(lineno) +
                               ": trailing token");
    raw.emplace_back(u, v);
  }
  if (raw.empty()) throw std::runtime_error("edge list is empty");

  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(raw.size() * (opt.undirected ? 2 : 1));
  std::vector<std::int64_t> labels;
  NodeId n = 0;
  if (opt.id_policy == IdPolicy::Remap) {
    std::unordered_map<std::int64_t, NodeId> dense;
    auto id_of = [&](std::int64_t x) {
      auto [it, fresh] = dense.try_emplace(x, NodeId(labels.size()));
      if (fresh) labels.push_back(x);
      return it->second;
    };
    for (auto [u, v] : raw) {
      NodeId du = id_of(u), dv = id_of(v);
      edges.emplace_back(du, dv);
      if (opt.undirected) edges.emplace_back(dv, du);
    }
    n = NodeId(labels.size());
    // identity tables carry no information; drop them
    bool identity = true;
    for (NodeId i = 0; i < n && identity; ++i) identity = labels[i] == std::int64_t(i);
    if (identity) labels.clear();
  } else {
    std::int64_t maxid = -1;
    for (auto [u, v] : raw) {
      if (u < 0 || v < 0)
        throw std::runtime_error("edge list has negative id with dense id policy");
      maxid = std::max({maxid, u, v});
      edges.emplace_back(NodeId(u), NodeId(v));
      if (opt.undirected) edges.emplace_back(NodeId(v), NodeId(u));
    }
    n = NodeId(maxid + 1);
  }
  return Graph::from_edges(n, edges, opt.undirected, std::move(labels));
}

inline Graph load_graph(const GraphSource& opt) {
  std::ifstream in(opt.path);
  if (!in) throw std::runtime_error("cannot open graph file: " + opt.path);
  return load_graph(in, opt);
}

// Edge list with original labels, one "u v" line per stored (directed) edge.
// Note an undirected source was expanded at load, so both directions appear.
inline void save_edge_list(const Graph& g, std::ostream& out) {
  for (NodeId u = 0; u < g.num_nodes(); ++u)
    for (NodeId v : g.out_neighbors(u))
      out << g.label_of(u) << ' ' << g.label_of(v) << '\n';
}

inline void save_edge_list(const Graph& g, const std::string& path) {
  std::ostringstream out;
  save_edge_list(g, out);
  write_file_atomic(path, out.str());
}

// Binary snapshot of the fully preprocessed graph (both CSR directions,
// sorted in-lists, labels). Versioned so stale caches are rejected.
struct GraphCacheIo {
  static constexpr std::uint32_t kMagic = 0x53504752;  // "RGPS" little-endian
  static constexpr std::uint32_t kVersion = 1;

  template <class T>
  static void put(std::string& buf, const T& x) {
    buf.append(reinterpret_cast<const char*>(&x), sizeof(T));
  }
  template <class T>
  static void put_vec(std::string& buf, const std::vector<T>& v) {
    put(buf, std::uint64_t(v.size()));
    buf.append(reinterpret_cast<const char*>(v.data()), v.size() * sizeof(T));
  }
  template <class T>
  static void get(const std::string& buf, std::size_t& pos, T& x) {
    if (pos + sizeof(T) > buf.size()) throw std::runtime_error("graph cache truncated");
    std::memcpy(&x, buf.data() + pos, sizeof(T));
    pos += sizeof(T);
  }
  template <class T>
  static void get_vec(const std::string& buf, std::size_t& pos, std::vector<T>& v) {
    std::uint64_t len = 0;
    get(buf, pos, len);
    if (pos + len * sizeof(T) > buf.size()) throw std::runtime_error("graph cache truncated");
    v.resize(len);
    std::memcpy(v.data(), buf.data() + pos, len * sizeof(T));
    pos += len * sizeof(T);
  }

  static void save(const Graph& g, const std::string& path) {
    std::string buf;
    put(buf, kMagic);
    put(buf, kVersion);
    put(buf, g.n_);
    put(buf, g.m_);
    put(buf, std::uint8_t(g.undirected_input_ ? 1 : 0));
    put_vec(buf, g.out_ptr_);
    put_vec(buf, g.out_adj_);
    put_vec(buf, g.in_ptr_);
    put_vec(buf, g.in_adj_);
    put_vec(buf, g.labels_);
    write_file_atomic(path, buf);
  }

  static Graph load(const std::string& path) {
    std::string buf = read_file(path);
    std::size_t pos = 0;
    std::uint32_t magic = 0, version = 0;
    get(buf, pos, magic);
    get(buf, pos, version);
    if (magic != kMagic) throw std::runtime_error("not a graph cache file: " + path);
    if (version != kVersion)
      throw std::runtime_error("unsupported graph cache version in " + path);
    Graph g;
    std::uint8_t undirected = 0;
    get(buf, pos, g.n_);
    get(buf, pos, g.m_);
    get(buf, pos, undirected);
    g.undirected_input_ = undirected != 0;
    get_vec(buf, pos, g.out_ptr_);
    get_vec(buf, pos, g.out_adj_);
    get_vec(buf, pos, g.in_ptr_);
    get_vec(buf, pos, g.in_adj_);
    get_vec(buf, pos, g.labels_);
    g.validate();
    return g;
  }
};

inline void save_graph_cache(const Graph& g, const std::string& path) {
  GraphCacheIo::save(g, path);
}

inline Graph load_graph_cache(const std::string& path) { return GraphCacheIo::load(path); }

}  // namespace stppr
