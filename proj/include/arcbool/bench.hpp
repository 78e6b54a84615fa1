#pragma once

#include <iosfwd>

#include "arcbool/boolean.hpp"

namespace arcbool {

struct BenchConfig {
  std::vector<int> sizes{5, 10, 20, 30, 40, 50};
  int trials = 100;
  std::vector<Method> methods{Method::Re2l, Method::Naive, Method::Standard};
  unsigned long long seed = 1;
  BoolOp op = BoolOp::Intersection;
  double arc_fraction = 0.5;
};

struct BenchRow {
  int n = 0;
  Method method = Method::Re2l;
  int trials = 0;
  double mean_sec = 0.0;
  double stddev_sec = 0.0;
  double pair_tests_mean = 0.0;
  double events_mean = 0.0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  int skipped = 0;       // regenerated degenerate/unsupported trials
  int total_trials = 0;  // accepted trials across all sizes
  // Per accepted trial: pair-test counts per method, for ordering checks.
  std::vector<std::vector<long long>> trial_pair_tests;
};

// Generates trial pairs from a deterministic seed stream, times every method
// on identical inputs, and accepts a trial only when all methods' results
// are canonically equal (MismatchedResults otherwise, with the offending
// seed in the message). Unsupported configurations are skipped, counted and
// regenerated.
BenchReport run_bench(const BenchConfig& cfg, const Tolerances& tol = {});

// Delimited table, one row per (n, method).
void write_bench_report(std::ostream& out, const BenchReport& report);

}  // namespace arcbool
