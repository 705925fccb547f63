#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>

#include "stppr/exact.hpp"
#include "stppr/oracle_cache.hpp"
#include "test_util.hpp"

using namespace stppr;

TEST_CASE("two-cycle scores match the closed form") {
  // alpha=0.2: self score 1/(2-alpha) * ... collapses to 5/9 and 4/9
  Graph g = testutil::two_cycle();
  DenseVector row = power_single_source(g, 0, 0.2);
  CHECK(row[0] == Catch::Approx(testutil::kTwoCycleSelf).margin(1e-9));
  CHECK(row[1] == Catch::Approx(testutil::kTwoCycleCross).margin(1e-9));

  DenseVector col = power_single_target(g, 1, 0.2);
  CHECK(col[0] == Catch::Approx(testutil::kTwoCycleCross).margin(1e-9));
  CHECK(col[1] == Catch::Approx(testutil::kTwoCycleSelf).margin(1e-9));
}

TEST_CASE("star leaf-to-hub score matches the closed form") {
  Graph g = testutil::star_in(5);
  DenseVector row = power_single_source(g, 1, 0.2);
  CHECK(row[0] == Catch::Approx(testutil::kStarLeafToHub).margin(1e-12));
  CHECK(row[1] == Catch::Approx(0.2).margin(1e-12));
  // hub is dangling, remaining mass vanished
  CHECK(row[0] + row[1] == Catch::Approx(0.36).margin(1e-12));
}

TEST_CASE("power iteration agrees with the walk-distribution oracle") {
  for (std::uint64_t seed : {1ULL, 2ULL}) {
    Graph g = testutil::er(18, 0.2, seed);
    for (NodeId s : {NodeId{0}, NodeId{7}}) {
      auto truth = testutil::reference_ppr_row(g, s, 0.2, 300);
      DenseVector row = power_single_source(g, s, 0.2, 300);
      for (NodeId t = 0; t < g.num_nodes(); ++t)
        CHECK(row[t] == Catch::Approx(truth[t]).margin(1e-12));
    }
  }
}

TEST_CASE("source and target sweeps agree entrywise") {
  Graph g = testutil::er(15, 0.25, 11);
  int iters = 200;
  std::vector<DenseVector> rows;
  for (NodeId s = 0; s < g.num_nodes(); ++s)
    rows.push_back(power_single_source(g, s, 0.2, iters));
  for (NodeId t = 0; t < g.num_nodes(); ++t) {
    DenseVector col = power_single_target(g, t, 0.2, iters);
    for (NodeId s = 0; s < g.num_nodes(); ++s)
      CHECK(col[s] == Catch::Approx(rows[s][t]).margin(2 * std::pow(0.8, 50)));
  }
}

TEST_CASE("dangling-free rows sum to one, columns sum to n on average") {
  Graph g = testutil::complete(6);
  double total = 0.0;
  for (NodeId s = 0; s < g.num_nodes(); ++s) {
    DenseVector row = power_single_source(g, s, 0.2);
    double sum = 0.0;
    for (NodeId t = 0; t < g.num_nodes(); ++t) sum += row[t];
    CHECK(sum == Catch::Approx(1.0).margin(1e-6));
    total += sum;
  }
  CHECK(total == Catch::Approx(6.0).margin(1e-5));
}

TEST_CASE("truncation error shrinks geometrically") {
  Graph g = testutil::cycle(5);
  DenseVector coarse = power_single_source(g, 0, 0.2, 10);
  DenseVector fine = power_single_source(g, 0, 0.2, 200);
  double worst = 0.0;
  for (NodeId t = 0; t < 5; ++t) worst = std::max(worst, std::abs(fine[t] - coarse[t]));
  CHECK(worst <= std::pow(0.8, 10));
  CHECK(worst > std::pow(0.8, 30));  // not vacuous
}

TEST_CASE("default iteration count meets the 1e-7 tail target") {
  CHECK(default_ground_truth_iters(0.2) == 73);
  CHECK(std::pow(0.8, default_ground_truth_iters(0.2)) <= 1e-7);
}

TEST_CASE("hop decomposition matches the per-hop oracle and sums to the score") {
  Graph g = testutil::er(14, 0.25, 5);
  NodeId t = 3;
  int max_level = 12;
  auto hops = hop_ppr_single_target(g, t, 0.2, max_level);
  REQUIRE(hops.size() == static_cast<std::size_t>(max_level) + 1);
  // the oracle walks forward from each source; entry t of its hop-l row must
  // equal entry s of the library's hop-l column
  for (NodeId s = 0; s < g.num_nodes(); ++s) {
    auto truth = testutil::reference_hop_rows(g, s, 0.2, max_level);
    for (int l = 0; l <= max_level; ++l)
      CHECK(hops[l][s] == Catch::Approx(truth[l][t]).margin(1e-12));
  }

  // partial sums undershoot the full score by at most the geometric tail
  DenseVector full = power_single_target(g, t, 0.2);
  for (NodeId s = 0; s < g.num_nodes(); ++s) {
    double partial = 0.0;
    for (int l = 0; l <= max_level; ++l) partial += hops[l][s];
    CHECK(partial <= full[s] + 1e-9);
    CHECK(full[s] - partial <= std::pow(0.8, max_level + 1) + 1e-9);
  }
}

TEST_CASE("hop zero is the stop mass at the target") {
  Graph g = testutil::er(10, 0.3, 2);
  auto hops = hop_ppr_single_target(g, 4, 0.2, 3);
  for (NodeId s = 0; s < g.num_nodes(); ++s)
    CHECK(hops[0][s] == (s == 4 ? 0.2 : 0.0));
}

TEST_CASE("alpha is validated") {
  Graph g = testutil::two_cycle();
  CHECK_THROWS(power_single_source(g, 0, 0.0));
  CHECK_THROWS(power_single_source(g, 0, 1.5));
  CHECK_THROWS(power_single_target(g, 0, -0.1));
}

TEST_CASE("oracle cache returns identical vectors and survives corruption") {
  Graph g = testutil::er(20, 0.15, 9);
  auto dir = std::filesystem::temp_directory_path() / "stppr_oracle_cache_test";
  std::filesystem::remove_all(dir);
  OracleCache cache(dir.string());
  DenseVector direct = power_single_target(g, 6, 0.2, 80);
  DenseVector first = cache.single_target(g, 6, 0.2, 80);
  DenseVector second = cache.single_target(g, 6, 0.2, 80);  // served from disk
  for (NodeId s = 0; s < g.num_nodes(); ++s) {
    CHECK(first[s] == direct[s]);
    CHECK(second[s] == direct[s]);
  }
  // a different target gets its own entry
  DenseVector other = cache.single_target(g, 7, 0.2, 80);
  CHECK_FALSE(other[6] == first[6]);

  // mangle every cached file; the cache must silently rebuild
  for (auto& e : std::filesystem::directory_iterator(dir)) {
    std::string bytes = read_file(e.path().string());
    bytes[bytes.size() / 2] ^= 0xff;
    write_file_atomic(e.path().string(), bytes);
  }
  DenseVector rebuilt = cache.single_target(g, 6, 0.2, 80);
  for (NodeId s = 0; s < g.num_nodes(); ++s) CHECK(rebuilt[s] == direct[s]);
  std::filesystem::remove_all(dir);
}

TEST_CASE("disabled oracle cache still computes") {
  Graph g = testutil::two_cycle();
  OracleCache cache("");
  DenseVector col = cache.single_target(g, 0, 0.2);
  CHECK(col[0] == Catch::Approx(testutil::kTwoCycleSelf).margin(1e-9));
}
