#ifndef GROVERSIM_STATS_HPP
#define GROVERSIM_STATS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

// Statistics used by the Monte-Carlo harness: Wilson score intervals for
// failure rates near zero, cost summaries from the exact recorded multiset,
// and log-log least squares for empirical complexity exponents.

namespace groversim {

struct interval {
  double lo = 0.0;
  double hi = 1.0;
};

// Wilson score interval for a binomial proportion.
inline interval wilson_interval(std::uint64_t hits, std::uint64_t trials, double z = 1.96) {
  if (trials == 0) return {0.0, 1.0};
  if (hits > trials) throw std::invalid_argument("wilson_interval: hits exceed trials");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(hits) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

struct trial_stats {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  double fail_rate = 0.0;
  interval fail_ci95;
  double cost_mean = 0.0;
  double cost_sd = 0.0;
  double cost_p50 = 0.0;
  double cost_p95 = 0.0;
};

namespace detail {

// Nearest-rank percentile over a sorted sample.
inline double percentile_sorted(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return 0.0;
  const double rank = std::ceil(q * static_cast<double>(sorted.size()));
  const std::size_t idx = rank < 1.0 ? 0 : static_cast<std::size_t>(rank) - 1;
  return sorted[std::min(idx, sorted.size() - 1)];
}

}  // namespace detail

inline trial_stats summarize_trials(const std::vector<double>& costs, std::uint64_t failures) {
  trial_stats s;
  s.trials = costs.size();
  s.failures = failures;
  if (s.trials == 0) return s;
  s.fail_rate = static_cast<double>(failures) / static_cast<double>(s.trials);
  s.fail_ci95 = wilson_interval(failures, s.trials);

  double sum = 0.0;
  for (double c : costs) sum += c;
  s.cost_mean = sum / static_cast<double>(costs.size());
  double ss = 0.0;
  for (double c : costs) ss += (c - s.cost_mean) * (c - s.cost_mean);
  s.cost_sd = costs.size() > 1 ? std::sqrt(ss / static_cast<double>(costs.size() - 1)) : 0.0;

  std::vector<double> sorted = costs;
  std::sort(sorted.begin(), sorted.end());
  s.cost_p50 = detail::percentile_sorted(sorted, 0.50);
  s.cost_p95 = detail::percentile_sorted(sorted, 0.95);
  return s;
}

// Passes when the observed rate is statistically consistent with being at or
// below the bound: the interval's lower end does not exceed it.
inline bool consistent_with_bound(const trial_stats& s, double bound) {
  if (bound < 0.0 || bound > 1.0) throw std::invalid_argument("consistent_with_bound: bound outside [0,1]");
  return s.fail_ci95.lo <= bound;
}

struct scaling_fit {
  std::vector<std::pair<double, double>> points;  // (size, mean cost)
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

// Least squares of log2(mean cost) against log2(size).
inline scaling_fit fit_loglog(std::vector<std::pair<double, double>> points) {
  if (points.size() < 3) throw std::invalid_argument("fit_loglog: need at least 3 points");
  scaling_fit fit;
  fit.points = std::move(points);
  const double n = static_cast<double>(fit.points.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& [size, cost] : fit.points) {
    const double x = std::log2(size);
    const double y = std::log2(cost);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  const double cov = sxy - sx * sy / n;
  const double varx = sxx - sx * sx / n;
  const double vary = syy - sy * sy / n;
  fit.slope = cov / varx;
  fit.intercept = (sy - fit.slope * sx) / n;
  fit.r2 = vary > 0.0 ? (cov * cov) / (varx * vary) : 1.0;
  return fit;
}

}  // namespace groversim

#endif
