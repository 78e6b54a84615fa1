#include "arcbool/bench.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include "arcbool/generator.hpp"

namespace arcbool {

namespace {

struct Accum {
  long long count = 0;
  double sum = 0.0;
  double sum_sq = 0.0;
  double pair_tests = 0.0;
  double events = 0.0;

  void add(double t, const SweepCounters& c) {
    ++count;
    sum += t;
    sum_sq += t * t;
    pair_tests += static_cast<double>(c.pair_tests);
    events += static_cast<double>(c.events);
  }
  double mean() const { return count ? sum / count : 0.0; }
  double stddev() const {
    if (count < 2) return 0.0;
    const double m = mean();
    return std::sqrt(std::max(0.0, sum_sq / count - m * m));
  }
};

}  // namespace

BenchReport run_bench(const BenchConfig& cfg, const Tolerances& tol) {
  if (cfg.trials < 1) fail(Errc::GenerationFailed, "trials must be >= 1");
  BenchReport report;
  unsigned long long seed_stream = cfg.seed * 1000003ULL + 17ULL;

  for (int n : cfg.sizes) {
    std::vector<Accum> acc(cfg.methods.size());
    int accepted = 0;
    while (accepted < cfg.trials) {
      const unsigned long long sa = seed_stream++;
      const unsigned long long sb = seed_stream++;
      ArcPolygon a = generate_polygon(n, sa, cfg.arc_fraction, tol);
      ArcPolygon b = generate_polygon(n, sb, cfg.arc_fraction, tol);

      std::vector<BoolResult> results(cfg.methods.size());
      std::vector<double> times(cfg.methods.size());
      std::vector<SweepCounters> counters(cfg.methods.size());
      bool skipped = false;
      for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
        PipelineStats stats;
        const auto t0 = std::chrono::steady_clock::now();
        try {
          results[mi] = boolean_op(a, b, cfg.op, cfg.methods[mi], tol, &stats);
        } catch (const Error& e) {
          switch (e.code()) {
            case Errc::DegenerateConfiguration:
            case Errc::OddCrossingCount:
            case Errc::OverlapUnsupported:
            case Errc::UnionHoleUnsupported:
            case Errc::DifferenceHoleUnsupported:
              skipped = true;
              break;
            default:
              throw;
          }
        }
        if (skipped) break;
        const auto t1 = std::chrono::steady_clock::now();
        times[mi] = std::chrono::duration<double>(t1 - t0).count();
        counters[mi] = stats.sweep;
      }
      if (skipped) {
        ++report.skipped;
        continue;
      }
      for (std::size_t mi = 1; mi < cfg.methods.size(); ++mi) {
        if (!canonical_equal(results[0], results[mi])) {
          std::ostringstream os;
          os << "methods disagree at n=" << n << " seeds=(" << sa << "," << sb << ") op="
             << bool_op_name(cfg.op);
          fail(Errc::MismatchedResults, os.str());
        }
      }
      std::vector<long long> per_method;
      for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
        acc[mi].add(times[mi], counters[mi]);
        per_method.push_back(counters[mi].pair_tests);
      }
      report.trial_pair_tests.push_back(std::move(per_method));
      ++accepted;
      ++report.total_trials;
    }
    for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
      BenchRow row;
      row.n = n;
      row.method = cfg.methods[mi];
      row.trials = static_cast<int>(acc[mi].count);
      row.mean_sec = acc[mi].mean();
      row.stddev_sec = acc[mi].stddev();
      row.pair_tests_mean = acc[mi].count ? acc[mi].pair_tests / acc[mi].count : 0.0;
      row.events_mean = acc[mi].count ? acc[mi].events / acc[mi].count : 0.0;
      report.rows.push_back(row);
    }
  }
  return report;
}

void write_bench_report(std::ostream& out, const BenchReport& report) {
  out << "n\tmethod\ttrials\tmean_sec\tstddev_sec\tpair_tests\tevents\n";
  char buf[64];
  for (const BenchRow& row : report.rows) {
    std::snprintf(buf, sizeof(buf), "%.9f\t%.9f", row.mean_sec, row.stddev_sec);
    out << row.n << "\t" << method_name(row.method) << "\t" << row.trials << "\t" << buf
        << "\t" << row.pair_tests_mean << "\t" << row.events_mean << "\n";
  }
  out << "# skipped_trials " << report.skipped << "\n";
  out << "# accepted_trials " << report.total_trials << "\n";
}

}  // namespace arcbool
