#include <doctest.h>

#include <sstream>

#include "arcbool/bench.hpp"

using namespace arcbool;

TEST_CASE("a small run produces one row per size and method") {
  BenchConfig cfg;
  cfg.sizes = {5, 8};
  cfg.trials = 4;
  cfg.seed = 11;
  BenchReport report = run_bench(cfg);
  REQUIRE(report.rows.size() == 6);
  CHECK(report.total_trials == 8);
  for (const BenchRow& row : report.rows) {
    CHECK(row.trials == 4);
    CHECK(row.mean_sec >= 0.0);
  }
  // The canonical-equality gate ran on every accepted trial; the labeled
  // sweep never tests more pairs than the plain one.
  REQUIRE(report.trial_pair_tests.size() == 8);
  for (const auto& counts : report.trial_pair_tests) {
    REQUIRE(counts.size() == 3);  // re2l, naive, standard
    CHECK(counts[0] <= counts[2]);
  }

  std::ostringstream out;
  write_bench_report(out, report);
  CHECK(out.str().find("n\tmethod") == 0);
  CHECK(out.str().find("re2l") != std::string::npos);
  CHECK(out.str().find("# skipped_trials") != std::string::npos);
}

TEST_CASE("single method, single trial") {
  BenchConfig cfg;
  cfg.sizes = {6};
  cfg.trials = 1;
  cfg.methods = {Method::Re2l};
  BenchReport report = run_bench(cfg);
  REQUIRE(report.rows.size() == 1);
  CHECK(report.rows[0].trials == 1);
}

TEST_CASE("the same seed regenerates identical inputs") {
  BenchConfig cfg;
  cfg.sizes = {6};
  cfg.trials = 3;
  cfg.methods = {Method::Re2l};
  BenchReport r1 = run_bench(cfg);
  BenchReport r2 = run_bench(cfg);
  REQUIRE(r1.rows.size() == r2.rows.size());
  // Same instances: identical instrumentation, possibly different times.
  CHECK(r1.rows[0].pair_tests_mean == r2.rows[0].pair_tests_mean);
  CHECK(r1.rows[0].events_mean == r2.rows[0].events_mean);
  CHECK(r1.skipped == r2.skipped);
}
