#ifndef GROVERSIM_EXPERIMENTS_HPP
#define GROVERSIM_EXPERIMENTS_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "groversim/baselines.hpp"
#include "groversim/core.hpp"
#include "groversim/dp.hpp"
#include "groversim/geometry.hpp"
#include "groversim/graph.hpp"
#include "groversim/primitives.hpp"
#include "groversim/stats.hpp"
#include "groversim/tools.hpp"

// Monte-Carlo experiment engine: named experiments bundle an instance
// generator with an algorithm invocation and a failure definition; the
// harness runs them on per-trial streams and reduces to TrialStats.

namespace groversim {

struct trial_outcome {
  bool failed = false;
  double cost = 0.0;  // charged queries
};

struct experiment {
  std::string name;
  std::function<trial_outcome(std::uint64_t seed, std::uint64_t stream)> run;
};

// Trial t uses stream id t; results are reduced in trial order, so a given
// (experiment, trials, seed) triple is fully reproducible.
inline trial_stats run_trials(const experiment& e, std::uint64_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("run_trials: trials must be positive");
  std::vector<double> costs;
  costs.reserve(trials);
  std::uint64_t failures = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const trial_outcome out = e.run(seed, t);
    costs.push_back(out.cost);
    if (out.failed) ++failures;
  }
  return summarize_trials(costs, failures);
}

inline scaling_fit fit_scaling(const std::function<experiment(index_t)>& family,
                               const std::vector<index_t>& sizes, std::uint64_t trials_per_size,
                               std::uint64_t seed) {
  if (sizes.size() < 3) throw std::invalid_argument("fit_scaling: need at least 3 sizes");
  std::vector<std::pair<double, double>> points;
  points.reserve(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const trial_stats s =
        run_trials(family(sizes[i]), trials_per_size, seed ^ (sizes[i] * 0x9e3779b97f4a7c15ULL));
    points.push_back({static_cast<double>(sizes[i]), s.cost_mean});
  }
  return fit_loglog(std::move(points));
}

// Deterministic instance generators, all driven by the caller's stream.
namespace gen {

// Exactly `sols` solution positions out of n, via partial Fisher-Yates.
inline std::vector<std::uint8_t> bits_with_solutions(index_t n, index_t sols, rng_stream& rng) {
  std::vector<index_t> perm(n);
  for (index_t i = 0; i < n; ++i) perm[i] = i;
  std::vector<std::uint8_t> bits(n, 0);
  for (index_t k = 0; k < sols && k < n; ++k) {
    const index_t pick = k + rng.below(n - k);
    std::swap(perm[k], perm[pick]);
    bits[perm[k]] = 1;
  }
  return bits;
}

inline std::vector<double> distinct_values(index_t n, rng_stream& rng) {
  std::vector<double> v(n);
  for (index_t i = 0; i < n; ++i) v[i] = static_cast<double>(i) + rng.next_unit() * 0.5;
  for (index_t i = n; i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
  return v;
}

inline graph_oracle random_graph(index_t v, index_t edges, bool directed, bool weighted,
                                 std::int64_t wmin, std::int64_t wmax, rng_stream& rng) {
  const index_t cap = directed ? v * (v - 1) : v * (v - 1) / 2;
  edges = std::min(edges, cap);
  std::set<std::pair<index_t, index_t>> used;
  std::vector<graph_edge> list;
  list.reserve(edges);
  while (list.size() < edges) {
    index_t a = rng.below(v);
    index_t b = rng.below(v);
    if (a == b) continue;
    if (!directed && a > b) std::swap(a, b);
    if (!used.insert({a, b}).second) continue;
    const double w =
        weighted ? static_cast<double>(wmin + static_cast<std::int64_t>(rng.below(wmax - wmin + 1))) : 1.0;
    list.push_back({a, b, w});
  }
  return graph_oracle::build(v, directed, weighted, std::move(list));
}

inline graph_oracle random_bipartite(index_t left, index_t right, std::uint64_t density_pct,
                                     rng_stream& rng) {
  std::vector<graph_edge> list;
  for (index_t u = 0; u < left; ++u)
    for (index_t w = 0; w < right; ++w)
      if (rng.below(100) < density_pct) list.push_back({u, left + w, 1.0});
  return graph_oracle::build(left + right, false, false, std::move(list), left);
}

inline point_set_zn random_points_zn(index_t n, std::int64_t bound, rng_stream& rng) {
  std::set<std::pair<std::int64_t, std::int64_t>> used;
  point_set_zn ps;
  ps.dim = 2;
  while (ps.points.size() < n) {
    const std::int64_t x = -bound + static_cast<std::int64_t>(rng.below(2 * bound + 1));
    const std::int64_t y = -bound + static_cast<std::int64_t>(rng.below(2 * bound + 1));
    if (!used.insert({x, y}).second) continue;
    ps.points.push_back({x, y});
  }
  return ps;
}

inline coin_system random_coins(index_t max_coins, std::int64_t max_target, rng_stream& rng) {
  coin_system cs;
  const index_t c = 1 + rng.below(max_coins);
  std::set<std::int64_t> seen;
  while (cs.coins.size() < c) {
    const std::int64_t coin = 1 + static_cast<std::int64_t>(rng.below(50));
    if (seen.insert(coin).second) cs.coins.push_back(coin);
  }
  cs.target = static_cast<std::int64_t>(rng.below(max_target + 1));
  return cs;
}

inline std::vector<std::vector<double>> random_matrix(index_t n, rng_stream& rng) {
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (auto& row : a)
    for (auto& x : row) x = static_cast<double>(static_cast<std::int64_t>(rng.below(19)) - 9);
  return a;
}

inline std::vector<std::int64_t> random_int_set(index_t n, std::int64_t bound, rng_stream& rng) {
  std::vector<std::int64_t> v(n);
  for (auto& x : v) x = -bound + static_cast<std::int64_t>(rng.below(2 * bound + 1));
  return v;
}

}  // namespace gen

struct experiment_config {
  index_t size = 1024;     // primary size knob: N, V or D
  index_t solutions = 1;   // M where applicable
  double eps_inv = 1000.0;
  double lambda = 1.31;
};

namespace detail {

inline graph_model model_for_stream(std::uint64_t stream) {
  return stream % 2 == 0 ? graph_model::edgelist : graph_model::matrix;
}

inline bool dist_equal(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == kInf || b[i] == kInf) {
      if (a[i] != b[i]) return false;
    } else if (a[i] != b[i]) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

// The registered experiment set.  Each draws a fresh instance per trial from
// the trial stream, runs the search-based algorithm, and reports the charged
// cost plus an experiment-specific failure verdict (usually disagreement
// with the classical reference).
inline experiment make_experiment(const std::string& name, const experiment_config& cfg) {
  const epsilon_budget budget(cfg.eps_inv);
  bbht_config bb;
  bb.lambda = cfg.lambda;
  search_params params;
  params.bbht = bb;

  if (name == "bbht") {
    return {name, [cfg, bb](std::uint64_t seed, std::uint64_t stream) {
              rng_stream rng(seed, stream);
              meter m;
              const auto oracle =
                  make_oracle(cfg.size, [&cfg](index_t x) { return x < cfg.solutions ? 1 : 0; });
              const search_outcome out = bbht(oracle, bb, m, rng);
              return trial_outcome{cfg.solutions > 0 && !out.found(),
                                   static_cast<double>(out.charged_cost)};
            }};
  }
  if (name == "grover") {
    return {name, [cfg](std::uint64_t seed, std::uint64_t stream) {
              rng_stream rng(seed, stream);
              meter m;
              const auto oracle =
                  make_oracle(cfg.size, [&cfg](index_t x) { return x < cfg.solutions ? 1 : 0; });
              const grover_run_result r = grover_run(oracle, 1, m, rng);
              return trial_outcome{!r.success, static_cast<double>(r.charged_cost)};
            }};
  }
  if (name == "bcwz") {
    return {name, [cfg, budget](std::uint64_t seed, std::uint64_t stream) {
              rng_stream rng(seed, stream);
              meter m;
              const auto oracle =
                  make_oracle(cfg.size, [&cfg](index_t x) { return x < cfg.solutions ? 1 : 0; });
              const search_outcome out = bcwz(oracle, budget, m, rng);
              return trial_outcome{cfg.solutions > 0 && !out.found(),
                                   static_cast<double>(out.charged_cost)};
            }};
  }
  if (name == "findsol") {
    return {name, [cfg, budget, params](std::uint64_t seed, std::uint64_t stream) {
              rng_stream rng(seed, stream);
              const auto bits = gen::bits_with_solutions(cfg.size, cfg.solutions, rng);
              meter m;
              const auto oracle = make_oracle(cfg.size, [&bits](index_t x) { return bits[x]; });
              const search_outcome out = findsol(oracle, budget, m, rng, params);
              return trial_outcome{cfg.solutions > 0 && !out.found(),
                                   static_cast<double>(m.charged_queries)};
            }};
  }
  if (name == "minfind") {
    return {name, [cfg, budget, params](std::uint64_t seed, std::uint64_t stream) {
              rng_stream rng(seed, stream);
              const auto values = gen::distinct_values(cfg.size, rng);
              meter m;
              const auto oracle = make_oracle(cfg.size, [&values](index_t x) { return values[x]; });
              const minfind_result res = minfind(oracle, budget, m, rng, params);
              return trial_outcome{res.value != classical::scan_min(values),
                                   static_cast<double>(m.charged_queries)};
            }};
  }
  if (name == "findall") {
    return {name, [cfg, budget, params](std::uint64_t seed, std::uint64_t stream) {
              rng_stream rng(seed, stream);
              const auto bits = gen::bits_with_solutions(cfg.size, cfg.solutions, rng);
              meter m;
              const auto oracle = make_oracle(cfg.size, [&bits](index_t x) { return bits[x]; });
              auto found = findall(oracle, budget, m, rng, params);
              std::sort(found.begin(), found.end());
              std::vector<index_t> expected;
              for (index_t i = 0; i < cfg.size; ++i)
                if (bits[i]) expected.push_back(i);
              return trial_outcome{found != expected, static_cast<double>(m.charged_queries)};
            }};
  }
  if (name == "mindiff") {
    return {name, [cfg, budget, params](std::uint64_t seed, std::uint64_t stream) {
              rng_stream rng(seed, stream);
              const index_t groups = 1 + rng.below(12);
              const index_t d = 1 + rng.below(6);
              const auto values = gen::distinct_values(cfg.size, rng);
              std::vector<std::uint64_t> labels(cfg.size);
              for (auto& l : labels) l = rng.below(groups);

              meter m;
              mindiff_params mp;
              mp.search = params;
              const auto f = make_oracle(cfg.size, [&values](index_t x) { return values[x]; });
              const auto g = make_oracle(cfg.size, [&labels](index_t x) { return labels[x]; });
              const auto res = mindiff(f, g, d, budget, m, rng, mp).entries;

              std::vector<std::pair<double, std::uint64_t>> real;
              for (const auto& e : res)
                if (!e.fictitious()) real.push_back({e.f_value, e.group});
              std::sort(real.begin(), real.end());
              return trial_outcome{real != classical::mindiff_reference(values, labels, d),
                                   static_cast<double>(m.charged_queries)};
            }};
  }
  if (name == "threesum") {
    return {name, [cfg, budget, params](std::uint64_t seed, std::uint64_t stream) {
              rng_stream rng(seed, stream);
              const auto values = gen::random_int_set(cfg.size, 50, rng);
              meter m;
              const bool got = threesum(values, budget, m, rng, params);
              return trial_outcome{got != classical::threesum_cubic(values),
                                   static_cast<double>(m.charged_queries)};
            }};
  }
  if (name == "bfs") {
    return {name, [cfg, budget, params](std::uint64_t seed, std::uint64_t stream) {
              rng_stream rng(seed, stream);
              const index_t v = 2 + rng.below(cfg.size - 1);
              const graph_oracle g = gen::random_graph(v, 2 * v, false, false, 1, 1, rng);
              meter m;
              auto order = bfs(g, detail::model_for_stream(stream), 0, budget, m, rng, params);
              std::sort(order.begin(), order.end());
              return trial_outcome{order != classical::bfs_reachable(g, 0),
                                   static_cast<double>(m.charged_queries)};
            }};
  }
  if (name == "bfs-scaling") {
    return {name, [cfg, budget, params](std::uint64_t seed, std::uint64_t stream) {
              rng_stream rng(seed, stream);
              const graph_oracle g = gen::random_graph(cfg.size, 4 * cfg.size, false, false, 1, 1, rng);
              meter m;
              auto order = bfs(g, graph_model::edgelist, 0, budget, m, rng, params);
              std::sort(order.begin(), order.end());
              return trial_outcome{order != classical::bfs_reachable(g, 0),
                                   static_cast<double>(m.charged_queries)};
            }};
  }
  if (name == "dfs") {
    return {name, [cfg, budget, params](std::uint64_t seed, std::uint64_t stream) {
              rng_stream rng(seed, stream);
              const index_t v = 2 + rng.below(cfg.size - 1);
              const graph_oracle g = gen::random_graph(v, 2 * v, false, false, 1, 1, rng);
              meter m;
              const dfs_result res = dfs(g, detail::model_for_stream(stream), 0, budget, m, rng, params);
              return trial_outcome{!classical::is_legal_dfs_order(g, 0, res.order),
                                   static_cast<double>(m.charged_queries)};
            }};
  }
  if (name == "spnw") {
    return {name, [cfg, budget, params](std::uint64_t seed, std::uint64_t stream) {
              rng_stream rng(seed, stream);
              const index_t v = 2 + rng.below(cfg.size - 1);
              const graph_oracle g = gen::random_graph(v, 3 * v, true, true, -3, 10, rng);
              meter m;
              const auto got = spnw(g, detail::model_for_stream(stream), 0, budget, m, rng, params);
              const auto want = classical::bellman_ford(g, 0);
              bool failed;
              if (!want || !got) {
                failed = static_cast<bool>(want) != static_cast<bool>(got);
              } else {
                failed = !detail::dist_equal(got->dist, *want);
              }
              return trial_outcome{failed, static_cast<double>(m.charged_queries)};
            }};
  }
  if (name == "sssp") {
    return {name, [cfg, budget, params](std::uint64_t seed, std::uint64_t stream) {
              rng_stream rng(seed, stream);
              const index_t v = 2 + rng.below(cfg.size - 1);
              const graph_oracle g = gen::random_graph(v, 3 * v, true, true, 0, 10, rng);
              meter m;
              const dist_array got = sssp_nonneg(g, detail::model_for_stream(stream), 0, budget, m, rng, params);
              return trial_outcome{!detail::dist_equal(got.dist, classical::dijkstra(g, 0)),
                                   static_cast<double>(m.charged_queries)};
            }};
  }
  if (name == "apsp") {
    return {name, [cfg, budget, params](std::uint64_t seed, std::uint64_t stream) {
              rng_stream rng(seed, stream);
              const index_t v = 2 + rng.below(cfg.size - 1);
              const graph_oracle g = gen::random_graph(v, 2 * v, true, true, -2, 10, rng);
              meter m;
              const auto got = apsp(g, detail::model_for_stream(stream), budget, m, rng, params);
              const auto want = classical::floyd_warshall(g);
              bool failed = static_cast<bool>(want) != static_cast<bool>(got);
              if (!failed && want) {
                for (index_t i = 0; i < v && !failed; ++i)
                  failed = !detail::dist_equal((*got)[i], (*want)[i]);
              }
              return trial_outcome{failed, static_cast<double>(m.charged_queries)};
            }};
  }
  if (name == "matching") {
    return {name, [cfg, budget, params](std::uint64_t seed, std::uint64_t stream) {
              rng_stream rng(seed, stream);
              const index_t side = 2 + rng.below(cfg.size / 2 - 1);
              const graph_oracle g = gen::random_bipartite(side, side, 30, rng);
              meter m;
              const matching got =
                  bipartite_matching(g, budget, m, rng, detail::model_for_stream(stream), params);
              return trial_outcome{got.size() != classical::hopcroft_karp_size(g),
                                   static_cast<double>(m.charged_queries)};
            }};
  }
  if (name == "coinchange") {
    return {name, [cfg, budget, params](std::uint64_t seed, std::uint64_t stream) {
              rng_stream rng(seed, stream);
              const coin_system cs = gen::random_coins(8, static_cast<std::int64_t>(cfg.size), rng);
              meter m;
              const coinchange_result got = coinchange(cs, budget, m, rng, params);
              return trial_outcome{got.count != classical::coinchange_dp(cs.coins, cs.target),
                                   static_cast<double>(m.charged_queries)};
            }};
  }
  if (name == "subarray") {
    return {name, [cfg, budget, params](std::uint64_t seed, std::uint64_t stream) {
              rng_stream rng(seed, stream);
              const index_t n = 1 + rng.below(cfg.size);
              const auto a = gen::random_matrix(n, rng);
              meter m;
              const subarray_result got = subarray_sum(a, budget, m, rng, params);
              return trial_outcome{got.sum != classical::subarray_max_sum(a),
                                   static_cast<double>(m.charged_queries)};
            }};
  }
  if (name == "maxpoints-zn") {
    return {name, [cfg, budget, params](std::uint64_t seed, std::uint64_t stream) {
              rng_stream rng(seed, stream);
              const point_set_zn ps = gen::random_points_zn(cfg.size, 30, rng);
              std::vector<std::array<std::int64_t, 2>> flat(ps.points.size());
              for (std::size_t i = 0; i < ps.points.size(); ++i)
                flat[i] = {ps.points[i][0], ps.points[i][1]};
              meter m;
              const maxpoints_zn_result got = maxpoints_zn(ps, budget, m, rng, params);
              return trial_outcome{got.count != classical::maxpoints_brute(flat),
                                   static_cast<double>(m.charged_queries)};
            }};
  }
  if (name == "maxpoints-r2") {
    return {name, [cfg, budget, params](std::uint64_t seed, std::uint64_t stream) {
              rng_stream rng(seed, stream);
              const point_set_zn zs = gen::random_points_zn(cfg.size, 30, rng);
              point_set_r2 ps;
              std::vector<std::array<std::int64_t, 2>> flat(zs.points.size());
              for (std::size_t i = 0; i < zs.points.size(); ++i) {
                ps.points.push_back({static_cast<double>(zs.points[i][0]),
                                     static_cast<double>(zs.points[i][1])});
                flat[i] = {zs.points[i][0], zs.points[i][1]};
              }
              meter m;
              const maxpoints_r2_result got = maxpoints_r2(ps, budget, 0.0, m, rng, params);
              return trial_outcome{got.count != classical::maxpoints_brute(flat),
                                   static_cast<double>(m.charged_queries)};
            }};
  }
  if (name == "linear-scan") {
    return {name, [cfg](std::uint64_t, std::uint64_t) {
              return trial_outcome{false, static_cast<double>(cfg.size)};
            }};
  }
  throw std::invalid_argument("unknown experiment: " + name);
}

inline const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names{
      "bbht",    "grover",      "bcwz",       "findsol",  "minfind",     "findall",
      "mindiff", "threesum",    "bfs",        "bfs-scaling", "dfs",      "spnw",
      "sssp",    "apsp",        "matching",   "coinchange", "subarray",  "maxpoints-zn",
      "maxpoints-r2", "linear-scan"};
  return names;
}

// Scaling families used by the bench frontend and the acceptance suite.
inline std::function<experiment(index_t)> scaling_family(const std::string& name,
                                                         experiment_config cfg) {
  return [name, cfg](index_t size) {
    experiment_config at = cfg;
    at.size = size;
    if (name == "findall") at.solutions = size / 4;
    return make_experiment(name == "bfs" ? "bfs-scaling" : name, at);
  };
}

namespace detail {

inline std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

}  // namespace detail

struct experiment_row {
  std::string experiment;
  double size = 0.0;
  std::string param;
  std::uint64_t trials = 0;
  trial_stats stats;
};

inline void write_experiment_csv(std::ostream& os, const std::vector<experiment_row>& rows) {
  os << "experiment,size,param,trials,fail_rate,fail_lo,fail_hi,cost_mean,cost_sd,cost_p50,cost_p95\n";
  for (const auto& r : rows) {
    os << r.experiment << ',' << detail::fmt(r.size) << ',' << r.param << ',' << r.trials << ','
       << detail::fmt(r.stats.fail_rate) << ',' << detail::fmt(r.stats.fail_ci95.lo) << ','
       << detail::fmt(r.stats.fail_ci95.hi) << ',' << detail::fmt(r.stats.cost_mean) << ','
       << detail::fmt(r.stats.cost_sd) << ',' << detail::fmt(r.stats.cost_p50) << ','
       << detail::fmt(r.stats.cost_p95) << '\n';
  }
}

inline void write_sweep_csv(std::ostream& os, const std::vector<sweep_row>& rows) {
  os << "lambda,mean_cost,cost_ci95,fail_rate,fail_ci95,trials\n";
  for (const auto& r : rows) {
    os << detail::fmt(r.lambda) << ',' << detail::fmt(r.mean_cost) << ',' << detail::fmt(r.cost_ci95)
       << ',' << detail::fmt(r.fail_rate) << ',' << detail::fmt(r.fail_ci95) << ',' << r.trials << '\n';
  }
}

inline std::string fit_summary_json(const scaling_fit& fit) {
  return std::string("{\"slope\": ") + detail::fmt(fit.slope) +
         ", \"intercept\": " + detail::fmt(fit.intercept) + ", \"r2\": " + detail::fmt(fit.r2) + "}";
}

}  // namespace groversim

#endif
