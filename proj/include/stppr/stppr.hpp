#pragma once

// Single-target personalized PageRank toolkit: exact oracles, push and
// sampling baselines, the randomized backward estimator, and the
// applications and evaluation harness built on top of them.

#include "stppr/backward_search.hpp"
#include "stppr/exact.hpp"
#include "stppr/forward_search.hpp"
#include "stppr/graph.hpp"
#include "stppr/graph_gen.hpp"
#include "stppr/graph_io.hpp"
#include "stppr/heavy_hitters.hpp"
#include "stppr/hop_index.hpp"
#include "stppr/io_util.hpp"
#include "stppr/lemma_checks.hpp"
#include "stppr/metrics.hpp"
#include "stppr/monte_carlo.hpp"
#include "stppr/oracle_cache.hpp"
#include "stppr/ppr_matrix.hpp"
#include "stppr/query_stats.hpp"
#include "stppr/rbs.hpp"
#include "stppr/rng.hpp"
#include "stppr/sampling.hpp"
#include "stppr/score_vector.hpp"
#include "stppr/tradeoff.hpp"
