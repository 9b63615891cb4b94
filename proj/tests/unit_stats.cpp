#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "groversim/core.hpp"
#include "groversim/stats.hpp"

using namespace groversim;

TEST_CASE("wilson interval basics") {
  const interval zero = wilson_interval(0, 10000);
  REQUIRE(zero.lo == 0.0);
  REQUIRE(zero.hi < 0.001);

  const interval mid = wilson_interval(3900, 10000);
  REQUIRE(mid.lo == Catch::Approx(0.3804).margin(0.001));
  REQUIRE(mid.hi == Catch::Approx(0.3997).margin(0.001));

  REQUIRE_THROWS_AS(wilson_interval(5, 4), std::invalid_argument);
}

TEST_CASE("failure-bound consistency check") {
  std::vector<double> costs(10000, 1.0);

  REQUIRE(consistent_with_bound(summarize_trials(costs, 0), 0.4));
  REQUIRE_FALSE(consistent_with_bound(summarize_trials(costs, 9000), 0.4));
  // Observed 0.39 is statistically compatible with a true rate at 0.4.
  REQUIRE(consistent_with_bound(summarize_trials(costs, 3900), 0.4));
  REQUIRE_THROWS_AS(consistent_with_bound(summarize_trials(costs, 0), 1.5), std::invalid_argument);
}

TEST_CASE("wilson coverage on synthetic Bernoulli data") {
  const double p = 0.3;
  const int per_batch = 200;
  const int batches = 10000;
  rng_stream rng(2024, 0);
  int covered = 0;
  for (int b = 0; b < batches; ++b) {
    int hits = 0;
    for (int i = 0; i < per_batch; ++i) hits += rng.next_unit() < p ? 1 : 0;
    const interval ci = wilson_interval(hits, per_batch);
    if (ci.lo <= p && p <= ci.hi) ++covered;
  }
  const double coverage = static_cast<double>(covered) / batches;
  REQUIRE(coverage >= 0.93);
  REQUIRE(coverage <= 0.97);
}

TEST_CASE("summary statistics use the exact recorded multiset") {
  const trial_stats s = summarize_trials({4.0, 1.0, 3.0, 2.0, 5.0}, 1);
  REQUIRE(s.trials == 5);
  REQUIRE(s.fail_rate == Catch::Approx(0.2));
  REQUIRE(s.cost_mean == Catch::Approx(3.0));
  REQUIRE(s.cost_sd == Catch::Approx(std::sqrt(2.5)));
  REQUIRE(s.cost_p50 == 3.0);
  REQUIRE(s.cost_p95 == 5.0);
}

TEST_CASE("log-log fit recovers an exact power law") {
  std::vector<std::pair<double, double>> pts;
  for (double size : {256.0, 512.0, 1024.0, 2048.0, 4096.0})
    pts.push_back({size, 7.0 * std::sqrt(size)});
  const scaling_fit fit = fit_loglog(pts);
  REQUIRE(fit.slope == Catch::Approx(0.5).margin(1e-6));
  REQUIRE(fit.r2 >= 0.999999);
  REQUIRE(std::pow(2.0, fit.intercept) == Catch::Approx(7.0).margin(1e-6));
}

TEST_CASE("log-log fit of a linear baseline") {
  std::vector<std::pair<double, double>> pts;
  for (double size : {64.0, 128.0, 256.0, 512.0}) pts.push_back({size, size});
  REQUIRE(fit_loglog(pts).slope == Catch::Approx(1.0).margin(0.05));
  REQUIRE_THROWS_AS(fit_loglog({{1.0, 1.0}, {2.0, 2.0}}), std::invalid_argument);
}

#include "groversim/experiments.hpp"

TEST_CASE("run_trials is deterministic and validates its input") {
  using namespace groversim;
  experiment_config cfg;
  cfg.size = 64;
  cfg.solutions = 2;
  const experiment e = make_experiment("bbht", cfg);
  const trial_stats a = run_trials(e, 400, 5);
  const trial_stats b = run_trials(e, 400, 5);
  REQUIRE(a.failures == b.failures);
  REQUIRE(a.cost_mean == b.cost_mean);
  REQUIRE(a.cost_p95 == b.cost_p95);
  REQUIRE_THROWS_AS(run_trials(e, 0, 5), std::invalid_argument);
  REQUIRE_THROWS_AS(make_experiment("no-such-experiment", cfg), std::invalid_argument);
}

TEST_CASE("different seeds agree within statistical error") {
  using namespace groversim;
  experiment_config cfg;
  cfg.size = 256;
  cfg.solutions = 1;
  const experiment e = make_experiment("bbht", cfg);
  const trial_stats a = run_trials(e, 5000, 101);
  const trial_stats b = run_trials(e, 5000, 202);
  const double p = 0.5 * (a.fail_rate + b.fail_rate);
  const double se_fail = std::sqrt(2.0 * p * (1.0 - p) / 5000.0);
  REQUIRE(std::abs(a.fail_rate - b.fail_rate) <= 3.0 * se_fail + 1e-9);
  const double se_mean = std::sqrt((a.cost_sd * a.cost_sd + b.cost_sd * b.cost_sd) / 5000.0);
  REQUIRE(std::abs(a.cost_mean - b.cost_mean) <= 3.0 * se_mean);
}

TEST_CASE("the classical linear-scan baseline fits slope one") {
  using namespace groversim;
  experiment_config cfg;
  const scaling_fit fit =
      fit_scaling(scaling_family("linear-scan", cfg), {64, 128, 256, 512}, 5, 1);
  REQUIRE(fit.slope == Catch::Approx(1.0).margin(0.05));
  REQUIRE_THROWS_AS(fit_scaling(scaling_family("linear-scan", cfg), {64, 128}, 5, 1),
                    std::invalid_argument);
}

TEST_CASE("every registered experiment runs") {
  using namespace groversim;
  for (const std::string& name : experiment_names()) {
    experiment_config cfg;
    cfg.size = 8;
    cfg.solutions = 2;
    const trial_stats s = run_trials(make_experiment(name, cfg), 3, 11);
    REQUIRE(s.trials == 3);
  }
}
