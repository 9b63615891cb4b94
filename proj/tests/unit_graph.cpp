#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <sstream>

#include "groversim/baselines.hpp"
#include "groversim/experiments.hpp"
#include "groversim/graph.hpp"

using namespace groversim;

namespace {

graph_oracle path3() {
  return graph_oracle::build(3, false, false, {{0, 1, 1.0}, {1, 2, 1.0}});
}

}  // namespace

TEST_CASE("graph construction validates its input") {
  REQUIRE_THROWS_AS(graph_oracle::build(3, false, false, {{0, 0, 1.0}}), std::invalid_argument);
  REQUIRE_THROWS_AS(graph_oracle::build(3, false, false, {{0, 1, 1.0}, {1, 0, 1.0}}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(graph_oracle::build(2, false, false, {{0, 5, 1.0}}), std::invalid_argument);
  // Directed graphs may carry both orientations.
  REQUIRE_NOTHROW(graph_oracle::build(2, true, false, {{0, 1, 1.0}, {1, 0, 1.0}}));
  // Bipartite split rejects within-side edges.
  REQUIRE_THROWS_AS(graph_oracle::build(4, false, false, {{0, 1, 1.0}}, 2), std::invalid_argument);
  REQUIRE_NOTHROW(graph_oracle::build(4, false, false, {{0, 2, 1.0}}, 2));
}

TEST_CASE("graph views agree") {
  const graph_oracle g = graph_oracle::build(4, true, true, {{0, 1, 4.0}, {0, 2, 5.0}, {1, 2, -2.0}});
  REQUIRE(g.has_edge(0, 1));
  REQUIRE_FALSE(g.has_edge(1, 0));
  REQUIRE(g.edge_weight(0, 2) == 5.0);
  REQUIRE(g.out_degree(0) == 2);
  REQUIRE(g.in_degree(2) == 2);
  index_t total = 0;
  for (index_t u = 0; u < 4; ++u) total += g.out_degree(u);
  REQUIRE(total == g.edge_count());

  const graph_oracle u = path3();
  total = 0;
  for (index_t i = 0; i < 3; ++i) total += u.out_degree(i);
  REQUIRE(total == 2 * u.edge_count());
}

TEST_CASE("graph file parsing") {
  std::istringstream good("3 2 directed weighted\n0 1 4\n0 2 5.5\n");
  const graph_oracle g = parse_graph(good);
  REQUIRE(g.vertex_count() == 3);
  REQUIRE(g.edge_weight(0, 2) == 5.5);

  std::istringstream bip("5 2 undirected unweighted\nleft 2\n0 2\n1 4\n");
  const graph_oracle b = parse_graph(bip);
  REQUIRE(b.left_size() == 2);

  std::istringstream empty_bip("3 0 undirected unweighted\nleft 1\n");
  REQUIRE(parse_graph(empty_bip).left_size() == 1);

  std::istringstream bad_header("3 x directed weighted\n");
  REQUIRE_THROWS_AS(parse_graph(bad_header), parse_error);

  std::istringstream missing_weight("2 1 directed weighted\n0 1\n");
  try {
    parse_graph(missing_weight);
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    REQUIRE(e.line == 2);
  }

  std::istringstream truncated("3 2 directed unweighted\n0 1\n");
  REQUIRE_THROWS_AS(parse_graph(truncated), parse_error);
}

TEST_CASE("bfs on a path visits in hop order") {
  const graph_oracle g = path3();
  for (graph_model model : {graph_model::matrix, graph_model::edgelist}) {
    rng_stream rng(50, static_cast<std::uint64_t>(model));
    meter m;
    REQUIRE(bfs(g, model, 0, epsilon_budget(1e6), m, rng) == std::vector<index_t>{0, 1, 2});
  }
}

TEST_CASE("bfs from an isolated vertex") {
  const graph_oracle g = graph_oracle::build(4, false, false, {{0, 1, 1.0}});
  rng_stream rng(51, 0);
  meter m;
  REQUIRE(bfs(g, graph_model::edgelist, 3, epsilon_budget(100.0), m, rng) ==
          std::vector<index_t>{3});
  REQUIRE_THROWS_AS(bfs(g, graph_model::matrix, 9, epsilon_budget(100.0), m, rng),
                    std::invalid_argument);
}

TEST_CASE("bfs visits only reachable vertices, each once") {
  int mismatches = 0;
  for (int t = 0; t < 200; ++t) {
    rng_stream gen(52, t);
    const index_t v = 2 + gen.below(23);
    const graph_oracle g = gen::random_graph(v, 2 * v, false, false, 1, 1, gen);

    rng_stream rng(53, t);
    meter m;
    auto order = bfs(g, t % 2 ? graph_model::matrix : graph_model::edgelist, 0,
                     epsilon_budget(1000.0), m, rng);
    const std::set<index_t> unique(order.begin(), order.end());
    REQUIRE(unique.size() == order.size());
    const auto reachable = classical::bfs_reachable(g, 0);
    const std::set<index_t> reach_set(reachable.begin(), reachable.end());
    for (index_t x : order) REQUIRE(reach_set.contains(x));
    std::sort(order.begin(), order.end());
    if (order != reachable) ++mismatches;
  }
  REQUIRE(mismatches <= 2);
}

TEST_CASE("dfs on a path gives the forced order") {
  const graph_oracle g = path3();
  rng_stream rng(54, 0);
  meter m;
  const dfs_result res = dfs(g, graph_model::edgelist, 0, epsilon_budget(1e6), m, rng);
  REQUIRE(res.order == std::vector<index_t>{0, 1, 2});
  REQUIRE(res.parent == std::vector<std::int64_t>{-1, 0, 1});
}

TEST_CASE("dfs on a star parents every leaf at the centre") {
  const graph_oracle g =
      graph_oracle::build(4, false, false, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}});
  rng_stream rng(55, 1);
  meter m;
  const dfs_result res = dfs(g, graph_model::matrix, 0, epsilon_budget(1e6), m, rng);
  REQUIRE(res.order.size() == 4);
  REQUIRE(res.order[0] == 0);
  for (index_t leaf : {1, 2, 3}) REQUIRE(res.parent[leaf] == 0);
}

TEST_CASE("dfs produces legal depth-first orders with visited parents") {
  int illegal = 0;
  for (int t = 0; t < 200; ++t) {
    rng_stream gen(56, t);
    const index_t v = 2 + gen.below(23);
    const graph_oracle g = gen::random_graph(v, 2 * v, false, false, 1, 1, gen);

    rng_stream rng(57, t);
    meter m;
    const dfs_result res = dfs(g, t % 2 ? graph_model::matrix : graph_model::edgelist, 0,
                               epsilon_budget(1000.0), m, rng);
    std::set<index_t> seen{res.order.front()};
    for (std::size_t i = 1; i < res.order.size(); ++i) {
      const index_t x = res.order[i];
      REQUIRE(res.parent[x] >= 0);  // hard: parent visited earlier and adjacent
      REQUIRE(seen.contains(static_cast<index_t>(res.parent[x])));
      REQUIRE(g.has_edge(static_cast<index_t>(res.parent[x]), x));
      seen.insert(x);
    }
    if (!classical::is_legal_dfs_order(g, 0, res.order)) ++illegal;
  }
  REQUIRE(illegal <= 2);
}

TEST_CASE("spnw fixture with a negative edge") {
  const graph_oracle g = graph_oracle::build(3, true, true, {{0, 1, 4.0}, {0, 2, 5.0}, {1, 2, -2.0}});
  for (graph_model model : {graph_model::matrix, graph_model::edgelist}) {
    rng_stream rng(58, static_cast<std::uint64_t>(model));
    meter m;
    const auto res = spnw(g, model, 0, epsilon_budget(1e6), m, rng);
    REQUIRE(res);
    REQUIRE(res->dist == std::vector<double>{0.0, 4.0, 2.0});
  }
}

TEST_CASE("spnw flags a reachable negative cycle") {
  const graph_oracle g =
      graph_oracle::build(3, true, true, {{0, 1, 1.0}, {1, 2, -2.0}, {2, 1, 1.0}});
  rng_stream rng(59, 0);
  meter m;
  REQUIRE_FALSE(spnw(g, graph_model::edgelist, 0, epsilon_budget(1e6), m, rng));
}

TEST_CASE("spnw leaves unreachable vertices at infinity") {
  const graph_oracle g = graph_oracle::build(3, true, true, {{0, 1, 2.0}});
  rng_stream rng(60, 0);
  meter m;
  const auto res = spnw(g, graph_model::edgelist, 0, epsilon_budget(1e6), m, rng);
  REQUIRE(res);
  REQUIRE(res->dist[2] == kInf);
  REQUIRE(res->from[2] == -1);
}

TEST_CASE("spnw agrees with Bellman-Ford and returned dist is chain-realizable") {
  int mismatches = 0;
  for (int t = 0; t < 200; ++t) {
    rng_stream gen(61, t);
    const index_t v = 2 + gen.below(23);
    const graph_oracle g = gen::random_graph(v, 3 * v, true, true, -3, 10, gen);

    rng_stream rng(62, t);
    meter m;
    const auto got = spnw(g, t % 2 ? graph_model::matrix : graph_model::edgelist, 0,
                          epsilon_budget(1000.0), m, rng);
    const auto want = classical::bellman_ford(g, 0);
    if (got) {
      // Hard invariant: replaying the predecessor chain reproduces dist.
      for (index_t i = 0; i < v; ++i) {
        if (got->from[i] < 0) {
          REQUIRE((i == 0 ? got->dist[i] == 0.0 : got->dist[i] == kInf));
        } else {
          const index_t p = static_cast<index_t>(got->from[i]);
          REQUIRE(got->dist[i] == got->dist[p] + g.edge_weight(p, i));
        }
      }
    }
    const bool agree = want && got ? got->dist == *want : static_cast<bool>(want) == static_cast<bool>(got);
    if (!agree) ++mismatches;
  }
  REQUIRE(mismatches <= 2);
}

TEST_CASE("sssp fixtures") {
  const graph_oracle g = graph_oracle::build(3, true, true, {{0, 1, 2.0}, {1, 2, 2.0}, {0, 2, 5.0}});
  for (graph_model model : {graph_model::matrix, graph_model::edgelist}) {
    rng_stream rng(63, static_cast<std::uint64_t>(model));
    meter m;
    const dist_array res = sssp_nonneg(g, model, 0, epsilon_budget(1e6), m, rng);
    REQUIRE(res.dist == std::vector<double>{0.0, 2.0, 4.0});
  }

  const graph_oracle single = graph_oracle::build(1, true, true, {});
  rng_stream rng(64, 0);
  meter m;
  REQUIRE(sssp_nonneg(single, graph_model::edgelist, 0, epsilon_budget(100.0), m, rng).dist ==
          std::vector<double>{0.0});

  const graph_oracle neg = graph_oracle::build(2, true, true, {{0, 1, -1.0}});
  REQUIRE_THROWS_AS(sssp_nonneg(neg, graph_model::edgelist, 0, epsilon_budget(100.0), m, rng),
                    std::invalid_argument);
}

TEST_CASE("sssp agrees with Dijkstra") {
  int mismatches = 0;
  for (int t = 0; t < 200; ++t) {
    rng_stream gen(65, t);
    const index_t v = 2 + gen.below(19);
    const graph_oracle g = gen::random_graph(v, 3 * v, true, true, 0, 10, gen);

    rng_stream rng(66, t);
    meter m;
    const dist_array got = sssp_nonneg(g, t % 2 ? graph_model::matrix : graph_model::edgelist, 0,
                                       epsilon_budget(1000.0), m, rng);
    if (got.dist != classical::dijkstra(g, 0)) ++mismatches;
  }
  REQUIRE(mismatches <= 2);
}

TEST_CASE("apsp fixtures") {
  const graph_oracle g = graph_oracle::build(2, true, true, {{0, 1, 2.0}, {1, 0, 3.0}});
  rng_stream rng(67, 0);
  meter m;
  const auto res = apsp(g, graph_model::edgelist, epsilon_budget(1e6), m, rng);
  REQUIRE(res);
  REQUIRE(*res == std::vector<std::vector<double>>{{0.0, 2.0}, {3.0, 0.0}});

  const graph_oracle cyc = graph_oracle::build(2, true, true, {{0, 1, 1.0}, {1, 0, -2.0}});
  REQUIRE_FALSE(apsp(cyc, graph_model::edgelist, epsilon_budget(1e6), m, rng));

  const graph_oracle split = graph_oracle::build(2, true, true, {});
  const auto far = apsp(split, graph_model::edgelist, epsilon_budget(1e6), m, rng);
  REQUIRE((*far)[0][1] == kInf);
}

TEST_CASE("apsp agrees with Floyd-Warshall and is symmetric on undirected graphs") {
  int mismatches = 0;
  for (int t = 0; t < 120; ++t) {
    rng_stream gen(68, t);
    const index_t v = 2 + gen.below(11);
    const bool undirected = t % 3 == 0;
    const graph_oracle g = undirected ? gen::random_graph(v, 2 * v, false, true, 0, 9, gen)
                                      : gen::random_graph(v, 2 * v, true, true, -2, 9, gen);

    rng_stream rng(69, t);
    meter m;
    const auto got = apsp(g, t % 2 ? graph_model::matrix : graph_model::edgelist,
                          epsilon_budget(1000.0), m, rng);
    const auto want = classical::floyd_warshall(g);
    bool agree = static_cast<bool>(want) == static_cast<bool>(got);
    if (agree && want) agree = *got == *want;
    if (!agree) {
      ++mismatches;
    } else if (undirected && got) {
      for (index_t i = 0; i < v; ++i)
        for (index_t j = 0; j < v; ++j) REQUIRE((*got)[i][j] == (*got)[j][i]);
    }
  }
  REQUIRE(mismatches <= 2);
}

TEST_CASE("matching fixtures") {
  const graph_oracle k22 = graph_oracle::build(
      4, false, false, {{0, 2, 1.0}, {0, 3, 1.0}, {1, 2, 1.0}, {1, 3, 1.0}}, 2);
  rng_stream rng(70, 0);
  meter m;
  REQUIRE(bipartite_matching(k22, epsilon_budget(1e6), m, rng).size() == 2);

  const graph_oracle shared =
      graph_oracle::build(3, false, false, {{0, 2, 1.0}, {1, 2, 1.0}}, 2);
  REQUIRE(bipartite_matching(shared, epsilon_budget(1e6), m, rng).size() == 1);

  const graph_oracle plain = graph_oracle::build(2, false, false, {{0, 1, 1.0}});
  REQUIRE_THROWS_AS(bipartite_matching(plain, epsilon_budget(100.0), m, rng),
                    std::invalid_argument);
}

TEST_CASE("matching is always a valid matching and usually maximum") {
  int mismatches = 0;
  for (int t = 0; t < 200; ++t) {
    rng_stream gen(71, t);
    const index_t side = 2 + gen.below(11);
    const graph_oracle g = gen::random_bipartite(side, side, 30, gen);

    rng_stream rng(72, t);
    meter m;
    const matching got = bipartite_matching(g, epsilon_budget(1000.0), m, rng,
                                            t % 2 ? graph_model::matrix : graph_model::edgelist);
    std::set<std::int64_t> rights;
    for (index_t u = 0; u < side; ++u) {
      const std::int64_t v = got.pair_left[u];
      if (v < 0) continue;
      REQUIRE(g.has_edge(u, static_cast<index_t>(v)));  // hard: pairs are edges
      REQUIRE(rights.insert(v).second);                 // hard: injective
      REQUIRE(got.pair_right[static_cast<index_t>(v) - side] == static_cast<std::int64_t>(u));
    }
    if (got.size() != classical::hopcroft_karp_size(g)) ++mismatches;
  }
  REQUIRE(mismatches <= 2);
}

TEST_CASE("graph charged queries flow through the meter") {
  rng_stream build_rng(73, 0);
  const graph_oracle g = gen::random_graph(16, 40, false, false, 1, 1, build_rng);
  rng_stream rng(74, 0);
  meter m;
  bfs(g, graph_model::edgelist, 0, epsilon_budget(100.0), m, rng);
  REQUIRE(m.charged_queries > 0);
  REQUIRE(m.classical_peeks > 0);
}
