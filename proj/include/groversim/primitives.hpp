#ifndef GROVERSIM_PRIMITIVES_HPP
#define GROVERSIM_PRIMITIVES_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "groversim/core.hpp"
#include "groversim/stats.hpp"

// Simulated Grover-descended search primitives.  Outcomes are sampled from
// the analytic success model (probability sin^2((2j+1)*theta) for j Grover
// iterations, theta = asin(sqrt(M/N))) rather than from state vectors, so
// behaviour matches the underlying analysis exactly at any domain size.

namespace groversim {

struct grover_run_result {
  index_t outcome = 0;
  bool success = false;
  std::uint64_t charged_cost = 0;  // (j+1) * weight: j iterations plus the verification call
};

// Success probability of a run with j iterations on a domain with `sols`
// solutions out of n.  The M=0 and M=N endpoints are pinned exactly.
inline double grover_success_probability(index_t n, index_t sols, std::uint64_t j) {
  if (sols == 0) return 0.0;
  if (sols >= n) return 1.0;
  const double theta = std::asin(std::sqrt(static_cast<double>(sols) / static_cast<double>(n)));
  const double s = std::sin((2.0 * static_cast<double>(j) + 1.0) * theta);
  return s * s;
}

template <binary_oracle O>
grover_run_result grover_run(const O& o, std::uint64_t j, meter& m, rng_stream& rng) {
  const index_t n = o.size();
  if (n == 0) throw std::invalid_argument("grover_run: empty domain");
  const index_t sols = count_solutions(o, m);
  const double p = grover_success_probability(n, sols, j);

  grover_run_result result;
  result.charged_cost = (j + 1) * o.weight();
  m.charged_queries += result.charged_cost;

  result.success = sols == n || (sols > 0 && rng.next_unit() < p);
  m.classical_peeks += n;
  if (result.success) {
    result.outcome = detail::nth_with_value(o, true, rng.below(sols));
  } else {
    result.outcome = detail::nth_with_value(o, false, rng.below(n - sols));
  }
  return result;
}

struct bbht_config {
  double lambda = 1.31;       // growth factor; 1.31 is the optimized default
  double m_init = 1.0;
  double cutoff_factor = 2.0; // give up once m exceeds cutoff_factor*sqrt(N)

  // The proven failure/time bounds require lambda < 1.64; anything in (1,2)
  // still terminates but is flagged by callers that report bounds.
  bool within_proven_range() const { return lambda < 1.64; }

  static bbht_config original() {  // the 8/7 preset from the first publication
    bbht_config c;
    c.lambda = 8.0 / 7.0;
    return c;
  }
};

inline void validate(const bbht_config& c) {
  if (!(c.lambda > 1.0 && c.lambda < 2.0)) throw std::invalid_argument("bbht: lambda must lie in (1,2)");
  if (!(c.m_init >= 1.0)) throw std::invalid_argument("bbht: m_init must be at least 1");
  if (!(c.cutoff_factor > 0.0)) throw std::invalid_argument("bbht: cutoff_factor must be positive");
}

// Search result: an index, or "false" (nullopt) when the search gave up.
struct search_outcome {
  std::optional<index_t> result;
  std::uint64_t charged_cost = 0;
  std::uint64_t rounds = 0;

  bool found() const { return result.has_value(); }
};

// BBHT search: grow the iteration bound m geometrically, run Grover with a
// random j < m each round, stop on a verified solution or when m passes the
// cutoff.  j is drawn from {0, ..., floor(m)-1}, reading the non-integer m
// "as one" for the draw; see the project notes for why floor.
template <binary_oracle O>
search_outcome bbht(const O& o, const bbht_config& cfg, meter& m, rng_stream& rng) {
  if (o.size() == 0) throw std::invalid_argument("bbht: empty domain");
  validate(cfg);

  search_outcome out;
  const double cutoff = cfg.cutoff_factor * std::sqrt(static_cast<double>(o.size()));
  for (double bound = cfg.m_init; bound <= cutoff; bound *= cfg.lambda) {
    const std::uint64_t j = rng.below(static_cast<std::uint64_t>(bound));
    const grover_run_result run = grover_run(o, j, m, rng);
    out.charged_cost += run.charged_cost;
    ++out.rounds;
    if (run.success) {
      out.result = run.outcome;
      return out;
    }
  }
  return out;
}

// BCWZ search: fixed cost ceil(sqrt(N * max(1, lg eps_inv))) and failure
// probability exactly eps when solutions exist.
template <binary_oracle O>
search_outcome bcwz(const O& o, epsilon_budget budget, meter& m, rng_stream& rng) {
  const index_t n = o.size();
  if (n == 0) throw std::invalid_argument("bcwz: empty domain");

  const double lg = std::max(1.0, std::log2(budget.eps_inv));
  search_outcome out;
  out.rounds = 1;
  out.charged_cost = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n) * lg))) * o.weight();
  m.charged_queries += out.charged_cost;

  const index_t sols = count_solutions(o, m);
  if (sols == 0) return out;
  if (rng.next_unit() < budget.eps()) return out;  // fails with probability eps
  m.classical_peeks += n;
  out.result = detail::nth_with_value(o, true, rng.below(sols));
  return out;
}

// Average failure probability of a Grover run when j is uniform over
// {0, ..., rounds-1}: direct sum of cos^2((2j+1)*theta) terms.  This is the
// primary evaluator; it has no singularities.
inline double avg_failure_direct(double theta, std::uint64_t rounds) {
  if (rounds == 0) throw std::invalid_argument("avg_failure_direct: rounds must be positive");
  double acc = 0.0;
  for (std::uint64_t j = 0; j < rounds; ++j) {
    const double c = std::cos((2.0 * static_cast<double>(j) + 1.0) * theta);
    acc += c * c;
  }
  return acc / static_cast<double>(rounds);
}

// Closed form 1/2 + sin(4*m*theta) / (4*m*sin(2*theta)), exposed for
// cross-checking.  Rejects theta = pi/2 where sin(2*theta) vanishes.
inline double avg_failure_closed(double theta, std::uint64_t rounds) {
  if (rounds == 0) throw std::invalid_argument("avg_failure_closed: rounds must be positive");
  const double s2 = std::sin(2.0 * theta);
  if (std::abs(s2) < 1e-12) throw std::domain_error("avg_failure_closed: singular at sin(2*theta)=0");
  const double fm = 4.0 * static_cast<double>(rounds);
  return 0.5 + std::sin(fm * theta) / (fm * s2);
}

// Iteration bound 0.69*sqrt(N/M) past which each BBHT round fails with
// probability at most 0.6; derived only for M <= N/2.
inline double m0_bound(index_t n, index_t sols) {
  if (sols < 1) throw std::invalid_argument("m0_bound: M must be positive");
  if (2 * sols > n) throw std::invalid_argument("m0_bound: requires M <= N/2");
  return 0.69 * std::sqrt(static_cast<double>(n) / static_cast<double>(sols));
}

// First `count` positive roots of tan(x) = x, one per branch
// ((k-1/2)pi, (k+1/2)pi).  tan(x) - x increases within each branch, so
// bisection is safe; iterate to full double precision.
inline std::vector<double> tan_fixed_points(std::size_t count) {
  if (count == 0) throw std::invalid_argument("tan_fixed_points: count must be positive");
  constexpr double kPi = 3.14159265358979323846;
  std::vector<double> roots;
  roots.reserve(count);
  for (std::size_t k = 1; k <= count; ++k) {
    double lo = (static_cast<double>(k) - 0.5) * kPi + 1e-6;
    double hi = (static_cast<double>(k) + 0.5) * kPi - 1e-6;
    while (true) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (std::tan(mid) - mid < 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    roots.push_back(0.5 * (lo + hi));
  }
  return roots;
}

struct sweep_row {
  double lambda = 0.0;
  double mean_cost = 0.0;
  double cost_ci95 = 0.0;  // half-width of the 95% interval on the mean
  double fail_rate = 0.0;
  double fail_ci95 = 0.0;  // half-width of the Wilson interval
  std::uint64_t trials = 0;
};

// Mean cost and failure rate of BBHT per growth factor, over `trials`
// searches on a domain of size n with `sols` solutions.  Trial t of row r
// uses stream r*trials + t, so rows merge deterministically.
inline std::vector<sweep_row> lambda_sweep(index_t n, index_t sols, const std::vector<double>& lambdas,
                                           std::uint64_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("lambda_sweep: trials must be positive");
  if (sols > n) throw std::invalid_argument("lambda_sweep: M cannot exceed N");
  const auto oracle = make_oracle(n, [sols](index_t x) { return x < sols ? 1 : 0; });

  std::vector<sweep_row> rows;
  rows.reserve(lambdas.size());
  for (std::size_t r = 0; r < lambdas.size(); ++r) {
    bbht_config cfg;
    cfg.lambda = lambdas[r];
    validate(cfg);

    std::vector<double> costs;
    costs.reserve(trials);
    std::uint64_t failures = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
      rng_stream rng(seed, r * trials + t);
      meter m;
      const search_outcome out = bbht(oracle, cfg, m, rng);
      costs.push_back(static_cast<double>(out.charged_cost));
      if (!out.found() && sols > 0) ++failures;
    }
    const trial_stats s = summarize_trials(costs, failures);
    sweep_row row;
    row.lambda = lambdas[r];
    row.mean_cost = s.cost_mean;
    row.cost_ci95 = trials > 1 ? 1.96 * s.cost_sd / std::sqrt(static_cast<double>(trials)) : 0.0;
    row.fail_rate = s.fail_rate;
    row.fail_ci95 = 0.5 * (s.fail_ci95.hi - s.fail_ci95.lo);
    row.trials = trials;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace groversim

#endif
