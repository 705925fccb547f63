// Command line front end. Exit codes: 0 ok, 1 I/O failure, 2 bad usage,
// 3 verify ran but a check failed.
#include <cstdint>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stppr/stppr.hpp"

namespace {

using namespace stppr;
using nlohmann::json;

Graph load_input_graph(const std::string& path, bool undirected) {
  if (path.size() > 4 && path.substr(path.size() - 4) == ".bin") return load_graph_cache(path);
  GraphSource src;
  src.path = path;
  src.undirected = undirected;
  return load_graph(src);
}

NodeId checked_node(std::int64_t v, const Graph& g, const char* what) {
  if (v < 0 || std::uint64_t(v) >= g.num_nodes())
    throw std::invalid_argument(std::string(what) + " out of range for this graph");
  return NodeId(v);
}

// CSV plus a .stats.json sidecar when writing to a file; bare CSV on stdout
// otherwise.
void emit(const std::string& out_path, const std::string& csv, const json& sidecar) {
  if (out_path.empty()) {
    std::cout << csv;
    return;
  }
  write_file_atomic(out_path, csv);
  write_file_atomic(out_path + ".stats.json", sidecar.dump(2) + "\n");
}

std::string score_csv(const ScoreVector& scores, const json& config_echo) {
  std::ostringstream out;
  out << "# " << config_echo.dump() << '\n';
  out << "node,value\n";
  for (auto [node, x] : scores.sorted_entries()) out << node << ',' << format_double(x) << '\n';
  return out.str();
}

json sidecar_json(const char* command, const json& config_echo, const QueryStats& stats,
                  bool record_wall) {
  json side;
  side["command"] = command;
  side["config"] = config_echo;
  side["stats"] = stats.to_json(record_wall);
  return side;
}

// Shared flag bundle for the estimator commands. eps/delta are the knobs in
// the guarantee statements; --theta bypasses them and sets the internal
// scale directly.
struct RbsFlags {
  std::string mode = "relative";
  double eps = 0.0;
  double delta = 0.0;
  double theta = 0.0;
  bool theoretical = false;
  std::uint64_t seed = 0;
  int boost = 1;
};

void add_rbs_flags(CLI::App* cmd, RbsFlags& f) {
  cmd->add_option("--mode", f.mode, "error regime: relative or additive")
      ->check(CLI::IsMember({"relative", "additive"}));
  cmd->add_option("--eps", f.eps, "additive error target (additive mode)");
  cmd->add_option("--delta", f.delta, "relative error floor (relative mode)");
  cmd->add_option("--theta", f.theta, "set the internal scale directly, overriding eps/delta");
  cmd->add_flag("--theoretical-theta", f.theoretical,
                "derive theta from the guarantee instead of using eps/delta as-is");
  cmd->add_option("--seed", f.seed, "random seed");
  cmd->add_option("--boost", f.boost, "odd repetition count for median boosting");
}

RbsConfig make_rbs_config(double alpha, const RbsFlags& f) {
  RbsConfig cfg = f.mode == "relative" ? RbsConfig::relative(1.0, f.seed, alpha)
                                       : RbsConfig::additive(1.0, f.seed, alpha);
  double knob = f.mode == "relative" ? f.delta : f.eps;
  if (f.theta > 0.0) {
    cfg.theta = f.theta;
  } else if (knob > 0.0) {
    cfg.theta = !f.theoretical      ? knob
                : f.mode == "relative" ? theoretical_relative_theta(knob, alpha)
                                       : theoretical_additive_theta(knob, alpha);
  } else {
    throw std::invalid_argument(f.mode == "relative" ? "relative mode needs --delta or --theta"
                                                     : "additive mode needs --eps or --theta");
  }
  cfg.boost = f.boost;
  return cfg;
}

json rbs_config_echo(double alpha, const RbsFlags& f, const RbsConfig& cfg) {
  return json{{"alpha", alpha},       {"mode", f.mode},   {"theta", cfg.theta},
              {"seed", f.seed},       {"boost", f.boost}, {"levels", cfg.levels()},
              {"theoretical", f.theoretical}};
}

struct StQueryArgs {
  std::string graph;
  bool undirected = false;
  double alpha = 0.2;
  std::string method = "rbs";
  std::string queue = "fifo";
  int iters = -1;
  std::int64_t target = 0;
  std::string out;
  std::string timing = "on";
  RbsFlags rbs;
};

void run_st_query(const StQueryArgs& a) {
  Graph g = load_input_graph(a.graph, a.undirected);
  NodeId t = checked_node(a.target, g, "target");
  bool record_wall = a.timing == "on";

  ScoreVector est;
  QueryStats stats;
  json echo{{"command", "st-query"}, {"graph", a.graph}, {"target", a.target},
            {"alpha", a.alpha},      {"method", a.method}};
  if (a.method == "power") {
    int iters = a.iters < 0 ? default_ground_truth_iters(a.alpha) : a.iters;
    DenseVector col = power_single_target(g, t, a.alpha, iters);
    for (NodeId s = 0; s < g.num_nodes(); ++s)
      if (col[s] != 0.0) est.set(s, col[s]);
    stats.edge_touches = std::uint64_t(iters) * g.num_edges();
    echo["iters"] = iters;
  } else if (a.method == "bs") {
    if (a.rbs.eps <= 0.0) throw std::invalid_argument("bs needs --eps > 0");
    BsOptions opt;
    opt.alpha = a.alpha;
    opt.eps = a.rbs.eps;
    opt.queue = a.queue == "maxfirst" ? BsQueuePolicy::MaxFirst : BsQueuePolicy::Fifo;
    BsResult r = backward_search(g, t, opt);
    est = std::move(r.reserves);
    stats = r.stats;
    echo["eps"] = a.rbs.eps;
    echo["queue"] = a.queue;
  } else {
    RbsConfig cfg = make_rbs_config(a.alpha, a.rbs);
    BoostedResult r = rbs_boosted(g, t, cfg);
    est = std::move(r.estimate);
    stats = r.stats;
    echo.update(rbs_config_echo(a.alpha, a.rbs, cfg));
  }
  emit(a.out, score_csv(est, echo), sidecar_json("st-query", echo, stats, record_wall));
}

struct SsQueryArgs {
  std::string graph;
  bool undirected = false;
  double alpha = 0.2;
  std::string method = "fs";
  double eps = 0.0;
  std::uint64_t walks = 10000;
  int iters = -1;
  std::uint64_t seed = 0;
  std::int64_t source = 0;
  std::string out;
  std::string timing = "on";
};

void run_ss_query(const SsQueryArgs& a) {
  Graph g = load_input_graph(a.graph, a.undirected);
  NodeId s = checked_node(a.source, g, "source");
  bool record_wall = a.timing == "on";

  ScoreVector est;
  QueryStats stats;
  json echo{{"command", "ss-query"}, {"graph", a.graph}, {"source", a.source},
            {"alpha", a.alpha},      {"method", a.method}};
  if (a.method == "power") {
    int iters = a.iters < 0 ? default_ground_truth_iters(a.alpha) : a.iters;
    DenseVector row = power_single_source(g, s, a.alpha, iters);
    for (NodeId t = 0; t < g.num_nodes(); ++t)
      if (row[t] != 0.0) est.set(t, row[t]);
    stats.edge_touches = std::uint64_t(iters) * g.num_edges();
    echo["iters"] = iters;
  } else if (a.method == "fs") {
    if (a.eps <= 0.0) throw std::invalid_argument("fs needs --eps > 0");
    FsResult r = forward_search(g, s, a.alpha, a.eps);
    est = std::move(r.reserves);
    stats = r.stats;
    echo["eps"] = a.eps;
  } else {
    McResult r = monte_carlo_single_source(g, s, a.alpha, a.walks, a.seed);
    est = std::move(r.estimate);
    stats = r.stats;
    echo["walks"] = a.walks;
    echo["seed"] = a.seed;
  }
  emit(a.out, score_csv(est, echo), sidecar_json("ss-query", echo, stats, record_wall));
}

struct HeavyHitterArgs {
  std::string graph;
  bool undirected = false;
  double alpha = 0.2;
  std::int64_t target = 0;
  double phi = 1e-2;
  double c = 0.1;
  double npi = 0.0;
  std::uint64_t seed = 0;
  int boost = 1;
  std::string out;
  std::string timing = "on";
};

void run_heavy_hitters(const HeavyHitterArgs& a) {
  Graph g = load_input_graph(a.graph, a.undirected);
  NodeId t = checked_node(a.target, g, "target");

  HeavyHitterConfig hh;
  hh.phi = a.phi;
  hh.c = a.c;
  if (a.npi > 0.0) {
    hh.n_pi_t = a.npi;
  } else {
    // column sum of exact contributions equals n * pagerank(t)
    DenseVector col = power_single_target(g, t, a.alpha);
    for (NodeId u = 0; u < g.num_nodes(); ++u) hh.n_pi_t += col[u];
  }
  RbsConfig base = RbsConfig::relative(1.0, a.seed, a.alpha);
  base.boost = a.boost;
  HeavyHitterResult res = heavy_hitters(g, t, hh, base);

  json echo{{"command", "heavy-hitters"}, {"graph", a.graph},     {"target", a.target},
            {"alpha", a.alpha},           {"phi", a.phi},         {"c", a.c},
            {"n_pi_t", hh.n_pi_t},        {"seed", a.seed},       {"boost", a.boost},
            {"threshold", res.threshold}};
  std::ostringstream csv;
  csv << "# " << echo.dump() << '\n';
  csv << "node,estimate,class\n";
  for (const HeavyHitter& h : res.hitters)
    csv << h.node << ',' << format_double(h.estimate) << ','
        << (h.cls == HitterClass::Absolute ? "absolute" : "permissible") << '\n';
  emit(a.out, csv.str(), sidecar_json("heavy-hitters", echo, res.stats, a.timing == "on"));
}

struct MatrixArgs {
  std::string graph;
  bool undirected = false;
  double alpha = 0.2;
  double eps = 1e-3;
  double drop = -1.0;
  std::string method = "rbs";
  int workers = 1;
  std::uint64_t seed = 0;
  int boost = 1;
  bool theoretical = false;
  std::string out;
  std::string bin;
  std::string timing = "on";
};

void run_ppr_matrix(const MatrixArgs& a) {
  Graph g = load_input_graph(a.graph, a.undirected);
  PprMatrixOptions opt;
  opt.alpha = a.alpha;
  opt.eps = a.eps;
  opt.drop_threshold = a.drop;
  opt.method = parse_matrix_method(a.method);
  opt.workers = a.workers;
  opt.seed = a.seed;
  opt.boost = a.boost;
  opt.theoretical_theta = a.theoretical;
  PprMatrix mat = build_ppr_matrix(g, opt);

  json echo{{"command", "ppr-matrix"}, {"graph", a.graph},   {"alpha", a.alpha},
            {"eps", a.eps},            {"drop", opt.drop()}, {"method", a.method},
            {"seed", a.seed},          {"boost", a.boost},   {"theoretical", a.theoretical}};
  std::ostringstream csv;
  save_ppr_matrix_csv(mat, csv, echo.dump());
  emit(a.out, csv.str(), sidecar_json("ppr-matrix", echo, mat.build_stats, a.timing == "on"));
  if (!a.bin.empty()) PprMatrixCacheIo::save(mat, a.bin);
}

struct HopIndexArgs {
  std::string graph;
  bool undirected = false;
  double alpha = 0.2;
  std::vector<std::int64_t> targets;
  bool all_targets = false;
  int workers = 1;
  std::string out;
  std::string timing = "on";
  RbsFlags rbs;
};

void run_hop_index(const HopIndexArgs& a) {
  Graph g = load_input_graph(a.graph, a.undirected);
  std::vector<NodeId> targets;
  if (a.all_targets) {
    for (NodeId t = 0; t < g.num_nodes(); ++t) targets.push_back(t);
  } else {
    for (std::int64_t t : a.targets) targets.push_back(checked_node(t, g, "target"));
  }
  RbsConfig base = make_rbs_config(a.alpha, a.rbs);
  HopIndex idx = build_hop_index(g, targets, base, a.workers);

  json echo = rbs_config_echo(a.alpha, a.rbs, base);
  echo["command"] = "hop-index";
  echo["graph"] = a.graph;
  echo["num_targets"] = targets.size();
  std::ostringstream csv;
  save_hop_index_csv(idx, csv, echo.dump());
  emit(a.out, csv.str(), sidecar_json("hop-index", echo, idx.build_stats, a.timing == "on"));
}

struct TradeoffArgs {
  std::string graph;
  bool undirected = false;
  std::string method = "rbs-relative";
  std::vector<double> sweep;
  int queries = 20;
  std::string sampling = "degree";
  std::uint64_t seed = 0;
  double alpha = 0.2;
  std::size_t k = 50;
  int boost = 1;
  bool theoretical = false;
  std::string cache;
  int truth_iters = 0;
  std::string out;
  std::string timing = "on";
};

void run_tradeoff(const TradeoffArgs& a) {
  Graph g = load_input_graph(a.graph, a.undirected);
  TradeoffOptions opt;
  opt.method = a.method;
  opt.sweep = a.sweep;
  opt.num_query_nodes = a.queries;
  opt.sampling = parse_sampling(a.sampling);
  opt.seed = a.seed;
  opt.alpha = a.alpha;
  opt.precision_k = a.k;
  opt.boost = a.boost;
  opt.theoretical_theta = a.theoretical;
  opt.cache_dir = a.cache;
  opt.record_wall = a.timing == "on";
  opt.truth_iters = a.truth_iters;
  std::vector<TradeoffRow> rows = stppr::run_tradeoff(g, opt);

  json echo{{"command", "tradeoff"},  {"graph", a.graph}, {"method", a.method},
            {"sweep", a.sweep},       {"queries", a.queries}, {"sampling", a.sampling},
            {"seed", a.seed},         {"alpha", a.alpha}, {"k", a.k},
            {"boost", a.boost},       {"theoretical", a.theoretical}};
  std::ostringstream csv;
  write_tradeoff_csv(rows, csv, echo);
  QueryStats none;
  emit(a.out, csv.str(), sidecar_json("tradeoff", echo, none, opt.record_wall));
}

struct VerifyArgs {
  std::string graph;
  bool undirected = false;
  double alpha = 0.2;
  std::int64_t target = 0;
  std::string mode = "relative";
  double theta = 1e-2;
  int levels = -1;
  int trials = 2000;
  double floor = 1e-4;
  std::uint64_t seed = 0;
  std::string out;
};

int run_verify(const VerifyArgs& a) {
  Graph g = load_input_graph(a.graph, a.undirected);
  NodeId t = checked_node(a.target, g, "target");
  RbsConfig cfg = a.mode == "relative" ? RbsConfig::relative(a.theta, a.seed, a.alpha)
                                       : RbsConfig::additive(a.theta, a.seed, a.alpha);
  if (a.levels >= 0) cfg.level_override = a.levels;
  LemmaCheckOptions opt;
  opt.trials = a.trials;
  opt.tracked_floor = a.floor;
  LemmaReport rep = verify_lemmas(g, t, cfg, opt);

  for (const LemmaCheck& c : rep.checks)
    std::cout << "[CHECK] " << c.name << ": " << (c.pass ? "PASS" : "FAIL")
              << " (observed " << format_double(c.observed) << ", bound "
              << format_double(c.bound) << ")\n";
  if (!a.out.empty()) write_file_atomic(a.out, rep.to_json().dump(2) + "\n");
  return rep.all_pass ? 0 : 3;
}

struct GenGraphArgs {
  std::string kind;
  std::int64_t n = 2;
  double p = 0.05;
  std::uint32_t k = 2;
  std::uint64_t seed = 0;
  std::string out;
};

void run_gen_graph(const GenGraphArgs& a) {
  if (a.n < 1) throw std::invalid_argument("gen-graph needs --n >= 1");
  GenOptions opt;
  opt.kind = parse_graph_kind(a.kind);
  opt.n = NodeId(a.n);
  opt.p = a.p;
  opt.k = a.k;
  opt.seed = a.seed;
  Graph g = generate_graph(opt);
  if (a.out.empty()) {
    std::ostringstream out;
    save_edge_list(g, out);
    std::cout << out.str();
  } else {
    save_edge_list(g, a.out);
  }
}

void add_graph_flags(CLI::App* cmd, std::string& graph, bool& undirected) {
  cmd->add_option("--graph", graph, "edge list path (.bin loads a graph cache)")->required();
  cmd->add_flag("--undirected", undirected, "treat input edges as undirected");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"single-target personalized pagerank toolkit"};
  app.require_subcommand(1);
  int exit_code = 0;

  auto st = std::make_shared<StQueryArgs>();
  {
    CLI::App* cmd = app.add_subcommand("st-query", "estimate one column: scores of all sources for a target");
    add_graph_flags(cmd, st->graph, st->undirected);
    cmd->add_option("--target", st->target, "target node id")->required();
    cmd->add_option("--alpha", st->alpha, "stop probability");
    cmd->add_option("--method", st->method, "power, bs or rbs")
        ->check(CLI::IsMember({"power", "bs", "rbs"}));
    cmd->add_option("--queue", st->queue, "bs push order: fifo or maxfirst")
        ->check(CLI::IsMember({"fifo", "maxfirst"}));
    cmd->add_option("--iters", st->iters, "power iteration rounds (default hits a 1e-7 tail)");
    add_rbs_flags(cmd, st->rbs);
    cmd->add_option("--out", st->out, "output CSV path (stdout if omitted)");
    cmd->add_option("--timing", st->timing, "on records wall-clock ms, off writes 0")
        ->check(CLI::IsMember({"on", "off"}));
    cmd->callback([st] { run_st_query(*st); });
  }

  auto ss = std::make_shared<SsQueryArgs>();
  {
    CLI::App* cmd = app.add_subcommand("ss-query", "estimate one row: scores of all targets for a source");
    add_graph_flags(cmd, ss->graph, ss->undirected);
    cmd->add_option("--source", ss->source, "source node id")->required();
    cmd->add_option("--alpha", ss->alpha, "stop probability");
    cmd->add_option("--method", ss->method, "power, fs or mc")
        ->check(CLI::IsMember({"power", "fs", "mc"}));
    cmd->add_option("--eps", ss->eps, "fs residue threshold");
    cmd->add_option("--walks", ss->walks, "mc walk count");
    cmd->add_option("--iters", ss->iters, "power iteration rounds");
    cmd->add_option("--seed", ss->seed, "mc random seed");
    cmd->add_option("--out", ss->out, "output CSV path (stdout if omitted)");
    cmd->add_option("--timing", ss->timing, "on records wall-clock ms, off writes 0")
        ->check(CLI::IsMember({"on", "off"}));
    cmd->callback([ss] { run_ss_query(*ss); });
  }

  auto hh = std::make_shared<HeavyHitterArgs>();
  {
    CLI::App* cmd = app.add_subcommand("heavy-hitters", "sources contributing at least phi of a target's mass");
    add_graph_flags(cmd, hh->graph, hh->undirected);
    cmd->add_option("--target", hh->target, "target node id")->required();
    cmd->add_option("--alpha", hh->alpha, "stop probability");
    cmd->add_option("--phi", hh->phi, "contribution threshold in (0,1)");
    cmd->add_option("--c", hh->c, "band half-width in (0,1)");
    cmd->add_option("--npi", hh->npi, "n * pagerank(target); computed exactly when omitted");
    cmd->add_option("--seed", hh->seed, "random seed");
    cmd->add_option("--boost", hh->boost, "odd repetition count for median boosting");
    cmd->add_option("--out", hh->out, "output CSV path (stdout if omitted)");
    cmd->add_option("--timing", hh->timing, "on records wall-clock ms, off writes 0")
        ->check(CLI::IsMember({"on", "off"}));
    cmd->callback([hh] { run_heavy_hitters(*hh); });
  }

  auto mx = std::make_shared<MatrixArgs>();
  {
    CLI::App* cmd = app.add_subcommand("ppr-matrix", "all-pairs approximation with per-entry error eps");
    add_graph_flags(cmd, mx->graph, mx->undirected);
    cmd->add_option("--alpha", mx->alpha, "stop probability");
    cmd->add_option("--eps", mx->eps, "per-entry error budget")->required();
    cmd->add_option("--drop", mx->drop, "omit entries below this (default eps)");
    cmd->add_option("--method", mx->method, "rbs, bs or fs")
        ->check(CLI::IsMember({"rbs", "bs", "fs"}));
    cmd->add_option("--workers", mx->workers, "worker threads");
    cmd->add_option("--seed", mx->seed, "random seed");
    cmd->add_option("--boost", mx->boost, "odd repetition count for median boosting");
    cmd->add_flag("--theoretical-theta", mx->theoretical, "run at the guarantee-backed theta");
    cmd->add_option("--out", mx->out, "output CSV path (stdout if omitted)");
    cmd->add_option("--bin", mx->bin, "also save a binary matrix cache here");
    cmd->add_option("--timing", mx->timing, "on records wall-clock ms, off writes 0")
        ->check(CLI::IsMember({"on", "off"}));
    cmd->callback([mx] { run_ppr_matrix(*mx); });
  }

  auto hi = std::make_shared<HopIndexArgs>();
  {
    CLI::App* cmd = app.add_subcommand("hop-index", "hop-resolved estimates for selected targets");
    add_graph_flags(cmd, hi->graph, hi->undirected);
    cmd->add_option("--alpha", hi->alpha, "stop probability");
    cmd->add_option("--targets", hi->targets, "target node ids")->delimiter(',');
    cmd->add_flag("--all-targets", hi->all_targets, "index every node");
    cmd->add_option("--workers", hi->workers, "worker threads");
    add_rbs_flags(cmd, hi->rbs);
    cmd->add_option("--out", hi->out, "output CSV path (stdout if omitted)");
    cmd->add_option("--timing", hi->timing, "on records wall-clock ms, off writes 0")
        ->check(CLI::IsMember({"on", "off"}));
    cmd->callback([hi] { run_hop_index(*hi); });
  }

  auto to = std::make_shared<TradeoffArgs>();
  {
    CLI::App* cmd = app.add_subcommand("tradeoff", "accuracy/cost sweep of one method over its knob");
    add_graph_flags(cmd, to->graph, to->undirected);
    cmd->add_option("--method", to->method, "power, bs, fs, mc, rbs-relative or rbs-additive");
    cmd->add_option("--sweep", to->sweep, "knob values, comma separated")
        ->delimiter(',')
        ->required();
    cmd->add_option("--queries", to->queries, "number of query nodes");
    cmd->add_option("--sampling", to->sampling, "degree or uniform query sampling")
        ->check(CLI::IsMember({"degree", "uniform"}));
    cmd->add_option("--seed", to->seed, "random seed");
    cmd->add_option("--alpha", to->alpha, "stop probability");
    cmd->add_option("--k", to->k, "precision@k cutoff");
    cmd->add_option("--boost", to->boost, "odd repetition count for median boosting");
    cmd->add_flag("--theoretical-theta", to->theoretical, "run at the guarantee-backed theta");
    cmd->add_option("--cache", to->cache, "ground-truth cache directory");
    cmd->add_option("--truth-iters", to->truth_iters, "power rounds for ground truth");
    cmd->add_option("--out", to->out, "output CSV path (stdout if omitted)");
    cmd->add_option("--timing", to->timing, "on records wall-clock ms, off writes 0")
        ->check(CLI::IsMember({"on", "off"}));
    cmd->callback([to] { run_tradeoff(*to); });
  }

  auto ve = std::make_shared<VerifyArgs>();
  {
    CLI::App* cmd = app.add_subcommand("verify", "audit unbiasedness, variance and cost bounds");
    add_graph_flags(cmd, ve->graph, ve->undirected);
    cmd->add_option("--target", ve->target, "target node id")->required();
    cmd->add_option("--alpha", ve->alpha, "stop probability");
    cmd->add_option("--mode", ve->mode, "relative or additive")
        ->check(CLI::IsMember({"relative", "additive"}));
    cmd->add_option("--theta", ve->theta, "internal scale to audit at");
    cmd->add_option("--levels", ve->levels, "hop cutoff override");
    cmd->add_option("--trials", ve->trials, "independent runs");
    cmd->add_option("--floor", ve->floor, "only hop entries above this are tracked");
    cmd->add_option("--seed", ve->seed, "random seed");
    cmd->add_option("--out", ve->out, "write the full report as JSON here");
    cmd->callback([ve, &exit_code] { exit_code = run_verify(*ve); });
  }

  auto gg = std::make_shared<GenGraphArgs>();
  {
    CLI::App* cmd = app.add_subcommand("gen-graph", "write a synthetic edge list");
    cmd->add_option("kind", gg->kind, "complete, cycle, star_in, erdos_renyi or ba_powerlaw")
        ->required();
    cmd->add_option("--n", gg->n, "node count")->required();
    cmd->add_option("--p", gg->p, "erdos_renyi edge probability");
    cmd->add_option("--k", gg->k, "ba_powerlaw attachments per node");
    cmd->add_option("--seed", gg->seed, "random seed");
    cmd->add_option("--out", gg->out, "output path (stdout if omitted)");
    cmd->callback([gg] { run_gen_graph(*gg); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}
