#ifndef GROVERSIM_CLI_HPP
#define GROVERSIM_CLI_HPP

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "groversim/acceptance.hpp"
#include "groversim/charts.hpp"
#include "groversim/experiments.hpp"

// Command-line frontend: run one algorithm on an input file, benchmark named
// experiments, verify the acceptance criteria, or reproduce the BBHT
// failure-model analysis.  Exit codes: 0 success, 1 usage or parse error,
// 2 algorithmic "false" (e.g. a negative cycle).

namespace groversim::cli {

namespace detail {

using nlohmann::json;

inline json json_dist(const std::vector<double>& dist) {
  json out = json::array();
  for (double d : dist) out.push_back(d == kInf ? json() : json(d));  // unreachable -> null
  return out;
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  return in;
}

struct run_result {
  json result;
  std::uint64_t rounds = 0;
  bool algorithmic_false = false;
};

inline run_result dispatch_run(const std::string& algo, const std::string& input, epsilon_budget budget,
                               double delta, meter& m, rng_stream& rng, const search_params& params) {
  run_result r;
  if (algo == "bfs" || algo == "dfs") {
    auto in = open_input(input);
    const graph_oracle g = parse_graph(in);
    if (algo == "bfs") {
      const auto order = bfs(g, graph_model::edgelist, 0, budget, m, rng, params);
      r.result = json{{"order", order}};
      r.rounds = order.size();
    } else {
      const dfs_result res = dfs(g, graph_model::edgelist, 0, budget, m, rng, params);
      r.result = json{{"order", res.order}, {"parent", res.parent}};
      r.rounds = res.order.size();
    }
  } else if (algo == "spnw" || algo == "sssp") {
    auto in = open_input(input);
    const graph_oracle g = parse_graph(in);
    r.rounds = g.vertex_count();
    if (algo == "sssp") {
      const dist_array d = sssp_nonneg(g, graph_model::edgelist, 0, budget, m, rng, params);
      r.result = json{{"dist", json_dist(d.dist)}, {"from", d.from}};
    } else {
      const auto d = spnw(g, graph_model::edgelist, 0, budget, m, rng, params);
      if (!d) {
        r.result = "negative-cycle";
        r.algorithmic_false = true;
      } else {
        r.result = json{{"dist", json_dist(d->dist)}, {"from", d->from}};
      }
    }
  } else if (algo == "apsp") {
    auto in = open_input(input);
    const graph_oracle g = parse_graph(in);
    r.rounds = g.vertex_count() + 1;
    const auto d = apsp(g, graph_model::edgelist, budget, m, rng, params);
    if (!d) {
      r.result = "negative-cycle";
      r.algorithmic_false = true;
    } else {
      json rows = json::array();
      for (const auto& row : *d) rows.push_back(json_dist(row));
      r.result = json{{"dist", rows}};
    }
  } else if (algo == "matching") {
    auto in = open_input(input);
    const graph_oracle g = parse_graph(in);
    const matching mt = bipartite_matching(g, budget, m, rng, graph_model::edgelist, params);
    json pairs = json::array();
    for (std::size_t u = 0; u < mt.pair_left.size(); ++u)
      if (mt.pair_left[u] >= 0) pairs.push_back(json::array({u, mt.pair_left[u]}));
    r.result = json{{"size", mt.size()}, {"pairs", pairs}};
    r.rounds = mt.size();
  } else if (algo == "maxpoints-zn") {
    auto in = open_input(input);
    const point_set_zn ps = parse_points_zn(in);
    const maxpoints_zn_result res = maxpoints_zn(ps, budget, m, rng, params);
    r.result = json{{"count", res.count}, {"base", res.line.base}, {"direction", res.line.direction}};
    r.rounds = ps.points.size();
  } else if (algo == "maxpoints-r2") {
    auto in = open_input(input);
    const point_set_r2 ps = parse_points_r2(in);
    const maxpoints_r2_result res = maxpoints_r2(ps, budget, delta, m, rng, params);
    r.result = json{{"count", res.count},
                    {"base", res.line.base},
                    {"direction", res.line.direction}};
    r.rounds = ps.points.size();
  } else if (algo == "coinchange") {
    auto in = open_input(input);
    json doc;
    try {
      in >> doc;
    } catch (const json::exception& e) {
      throw parse_error(1, e.what());
    }
    if (!doc.contains("coins") || !doc.contains("target")) throw parse_error(1, "expected {\"coins\": [...], \"target\": D}");
    coin_system cs;
    cs.coins = doc["coins"].get<std::vector<std::int64_t>>();
    cs.target = doc["target"].get<std::int64_t>();
    const coinchange_result res = coinchange(cs, budget, m, rng, params);
    r.result = res.count == kInf ? json() : json(res.count);
    r.rounds = cs.target;
  } else if (algo == "subarray") {
    auto in = open_input(input);
    const auto a = parse_matrix(in);
    const subarray_result res = subarray_sum(a, budget, m, rng, params);
    r.result = json{{"rect", {res.r.miny, res.r.minx, res.r.maxy, res.r.maxx}}, {"sum", res.sum}};
    r.rounds = a.size();
  } else if (algo == "threesum") {
    auto in = open_input(input);
    const auto values = parse_int_list(in);
    r.result = threesum(values, budget, m, rng, params);
    r.rounds = values.size();
  } else {
    throw CLI::ValidationError("--algo", "unknown algorithm: " + algo);
  }
  return r;
}

inline void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot write");
  out << text;
}

inline int parse_criterion(const std::string& token) {
  static const std::map<std::string, int> names{
      {"bbht-bounds", 1}, {"table5", 1},   {"grover", 2},   {"ftheta", 3},  {"lambda", 4},      {"tools", 5},
      {"scaling", 6},     {"graphs", 7},   {"geometry", 8}, {"geometry-dp", 8}, {"dp", 8},
      {"determinism", 9}};
  const auto it = names.find(token);
  if (it != names.end()) return it->second;
  const int id = std::atoi(token.c_str());
  if (id >= 1 && id <= 9) return id;
  throw CLI::ValidationError("--criteria", "unknown criterion: " + token);
}

}  // namespace detail

inline int main(int argc, const char* const* argv) {
  CLI::App app{"classical simulator of search-based quantum query algorithms"};
  app.require_subcommand(1);

  std::string algo, input, output, format = "json", bench_format = "csv";
  double eps_inv = 1000.0, lambda = 1.31, delta = 1e-9;
  std::uint64_t seed = 42, trials = 1000;
  std::vector<std::string> criteria;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--eps-inv", eps_inv, "inverse failure budget (> 1)");
    cmd->add_option("--seed", seed, "base RNG seed");
    cmd->add_option("--output", output, "output path (default stdout)");
    cmd->add_option("--lambda", lambda, "BBHT growth factor");
  };

  auto* run = app.add_subcommand("run", "run one algorithm on an input file");
  run->add_option("--algo", algo, "algorithm name")->required();
  run->add_option("--input", input, "input file")->required();
  run->add_option("--format", format, "json (default)");
  run->add_option("--delta", delta, "collinearity tolerance for maxpoints-r2");
  add_common(run);

  auto* bench = app.add_subcommand("bench", "benchmark a named experiment");
  bench->add_option("--algo", algo, "experiment name, or findsol-fit | findall-fit | minfind-fit | bfs-fit")
      ->required();
  bench->add_option("--trials", trials, "trials per point");
  bench->add_option("--format", bench_format, "csv (default) or json fit summary");
  add_common(bench);

  auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
  verify->add_option("--criteria", criteria, "subset of criteria (names or 1..9)")->delimiter(',');
  add_common(verify);

  auto* analyze = app.add_subcommand("analyze-bbht", "failure-model analysis and growth-factor sweep");
  analyze->add_option("--trials", trials, "trials per sweep row");
  add_common(analyze);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (run->parsed()) {
      rng_stream rng(seed, 0);
      meter m;
      search_params params;
      params.bbht.lambda = lambda;
      const detail::run_result r =
          detail::dispatch_run(algo, input, epsilon_budget(eps_inv), delta, m, rng, params);
      nlohmann::json doc{{"result", r.result},
                         {"charged_queries", m.charged_queries},
                         {"classical_peeks", m.classical_peeks},
                         {"rounds", r.rounds},
                         {"seed", seed}};
      detail::write_text(output, doc.dump(2) + "\n");
      return r.algorithmic_false ? 2 : 0;
    }

    if (bench->parsed()) {
      experiment_config cfg;
      cfg.eps_inv = eps_inv;
      cfg.lambda = lambda;
      if (algo.size() > 4 && algo.ends_with("-fit")) {
        const std::string base = algo.substr(0, algo.size() - 4);
        cfg.solutions = 1;
        const std::vector<index_t> sizes = base == "bfs" ? std::vector<index_t>{64, 128, 256, 512, 1024}
                                                         : std::vector<index_t>{256, 512, 1024, 2048, 4096};
        std::vector<experiment_row> rows;
        for (index_t size : sizes) {
          experiment_config at = cfg;
          at.size = size;
          if (base == "findall") at.solutions = size / 4;
          const std::string name = base == "bfs" ? "bfs-scaling" : base;
          rows.push_back({base, static_cast<double>(size), "eps_inv=" + detail::json(eps_inv).dump(),
                          trials, run_trials(make_experiment(name, at), trials, seed)});
        }
        const scaling_fit fit = fit_scaling(scaling_family(base, cfg), sizes, trials, seed);
        std::ostringstream csv;
        write_experiment_csv(csv, rows);
        if (bench_format == "json") {
          detail::write_text(output, fit_summary_json(fit) + "\n");
        } else {
          detail::write_text(output, csv.str());
          std::cerr << fit_summary_json(fit) << "\n";
        }
        if (!output.empty()) {
          chart_series series{base, {}};
          for (const auto& row : rows)
            series.points.push_back({std::log2(row.size), std::log2(row.stats.cost_mean)});
          std::ofstream svg(output + ".svg");
          write_svg_chart(svg, base + " scaling", "log2 size", "log2 mean charged cost", {series});
        }
        return 0;
      }
      cfg.size = algo == "subarray" ? 12 : algo == "threesum" ? 30 : algo == "maxpoints-zn" ? 40
                 : algo == "maxpoints-r2"                     ? 40
                 : algo == "coinchange"                       ? 500
                 : algo == "apsp"                             ? 15
                 : algo == "matching" || algo == "bfs" || algo == "dfs" || algo == "spnw" || algo == "sssp"
                     ? 25
                     : 1024;
      const trial_stats s = run_trials(make_experiment(algo, cfg), trials, seed);
      std::vector<experiment_row> rows{{algo, static_cast<double>(cfg.size),
                                        "eps_inv=" + detail::json(eps_inv).dump(), trials, s}};
      std::ostringstream csv;
      write_experiment_csv(csv, rows);
      detail::write_text(output, csv.str());
      return 0;
    }

    if (verify->parsed()) {
      acceptance_options opts;
      opts.seed = seed;
      opts.bbht_lambda = lambda;
      for (const std::string& token : criteria) opts.criteria.insert(detail::parse_criterion(token));
      const auto results = run_acceptance(opts);
      bool all_pass = true;
      for (const auto& c : results) {
        const bool in_time = c.seconds <= runtime_budget_seconds(c.id);
        all_pass = all_pass && c.pass && in_time;
        std::cerr << (c.pass && in_time ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << " " << c.name
                  << " (" << c.rows.size() << " checks)\n";
      }
      detail::write_text(output, acceptance_report_csv(results));
      return all_pass ? 0 : 1;
    }

    // analyze-bbht
    std::vector<double> lambdas;
    for (int i = 0; i <= 10; ++i) lambdas.push_back(1.10 + 0.05 * i);
    lambdas.push_back(1.31);
    lambdas.push_back(8.0 / 7.0);
    if (lambda != 1.31) lambdas.push_back(lambda);
    const auto rows = lambda_sweep(4096, 1, lambdas, trials, seed);
    std::ostringstream csv;
    write_sweep_csv(csv, rows);
    detail::write_text(output, csv.str());

    double best_cost = kInf, best_lambda = 0.0;
    for (const auto& r : rows)
      if (r.mean_cost < best_cost) {
        best_cost = r.mean_cost;
        best_lambda = r.lambda;
      }
    const auto roots = tan_fixed_points(2);
    nlohmann::json summary{{"tan_roots", roots},
                           {"m0_bound_n1024_m1", m0_bound(1024, 1)},
                           {"sweep_min_lambda", best_lambda},
                           {"sweep_min_mean_cost", best_cost}};
    std::cerr << summary.dump(2) << "\n";
    if (!output.empty()) {
      chart_series costs{"mean cost", {}};
      for (const auto& r : rows) costs.points.push_back({r.lambda, r.mean_cost});
      std::sort(costs.points.begin(), costs.points.end());
      std::ofstream svg(output + ".svg");
      write_svg_chart(svg, "BBHT growth-factor sweep", "lambda", "mean charged cost", {costs});
    }
    return 0;
  } catch (const parse_error& e) {
    std::cerr << (input.empty() ? "input" : input) << ":" << e.line << ": "
              << std::string(e.what()).substr(std::string(e.what()).find(": ") + 2) << "\n";
    return 1;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace groversim::cli

#endif
