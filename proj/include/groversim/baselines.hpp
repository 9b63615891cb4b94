#ifndef GROVERSIM_BASELINES_HPP
#define GROVERSIM_BASELINES_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "groversim/core.hpp"
#include "groversim/geometry.hpp"
#include "groversim/graph.hpp"

// Classical reference implementations used as comparison oracles by the
// harness and the acceptance suite.  Each is written directly from the
// textbook algorithm and shares no code with the search-based path.

namespace groversim::classical {

inline double scan_min(const std::vector<double>& values) {
  double best = kInf;
  for (double v : values) best = std::min(best, v);
  return best;
}

inline std::vector<index_t> bfs_reachable(const graph_oracle& g, index_t source) {
  std::vector<std::uint8_t> visited(g.vertex_count(), 0);
  std::deque<index_t> queue{source};
  visited[source] = 1;
  std::vector<index_t> out;
  while (!queue.empty()) {
    const index_t u = queue.front();
    queue.pop_front();
    out.push_back(u);
    for (index_t k = 0; k < g.out_degree(u); ++k) {
      const index_t t = g.out_edge(u, k).first;
      if (!visited[t]) {
        visited[t] = 1;
        queue.push_back(t);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Checks that `order` is a legal depth-first visit sequence from `source`
// covering exactly the reachable set: replayed against the adjacency
// structure, each next vertex must be adjacent to the deepest stack entry
// that still has unvisited neighbours.
inline bool is_legal_dfs_order(const graph_oracle& g, index_t source, const std::vector<index_t>& order) {
  if (order.empty() || order.front() != source) return false;
  const std::vector<index_t> reachable = bfs_reachable(g, source);
  std::vector<index_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (sorted != reachable) return false;

  std::vector<std::uint8_t> visited(g.vertex_count(), 0);
  visited[source] = 1;
  std::vector<index_t> stack{source};
  const auto has_unvisited_neighbour = [&](index_t u) {
    for (index_t k = 0; k < g.out_degree(u); ++k)
      if (!visited[g.out_edge(u, k).first]) return true;
    return false;
  };
  for (std::size_t i = 1; i < order.size(); ++i) {
    const index_t next = order[i];
    while (!stack.empty() && !has_unvisited_neighbour(stack.back())) stack.pop_back();
    if (stack.empty() || !g.has_edge(stack.back(), next)) return false;
    visited[next] = 1;
    stack.push_back(next);
  }
  return true;
}

// Bellman-Ford; nullopt when a negative cycle is reachable from the source.
inline std::optional<std::vector<double>> bellman_ford(const graph_oracle& g, index_t source) {
  const index_t v = g.vertex_count();
  std::vector<double> dist(v, kInf);
  dist[source] = 0.0;
  const auto relax_all = [&]() {
    bool changed = false;
    for (index_t u = 0; u < v; ++u) {
      if (dist[u] == kInf) continue;
      for (index_t k = 0; k < g.out_degree(u); ++k) {
        const auto [t, w] = g.out_edge(u, k);
        if (dist[u] + w < dist[t]) {
          dist[t] = dist[u] + w;
          changed = true;
        }
      }
    }
    return changed;
  };
  for (index_t round = 1; round < v; ++round) {
    if (!relax_all()) break;
  }
  if (relax_all()) return std::nullopt;
  return dist;
}

inline std::vector<double> dijkstra(const graph_oracle& g, index_t source) {
  const index_t v = g.vertex_count();
  std::vector<double> dist(v, kInf);
  std::vector<std::uint8_t> done(v, 0);
  dist[source] = 0.0;
  for (index_t step = 0; step < v; ++step) {
    index_t u = v;
    double best = kInf;
    for (index_t i = 0; i < v; ++i) {
      if (!done[i] && dist[i] < best) {
        best = dist[i];
        u = i;
      }
    }
    if (u == v) break;
    done[u] = 1;
    for (index_t k = 0; k < g.out_degree(u); ++k) {
      const auto [t, w] = g.out_edge(u, k);
      if (dist[u] + w < dist[t]) dist[t] = dist[u] + w;
    }
  }
  return dist;
}

// Floyd-Warshall; nullopt when any negative cycle exists.
inline std::optional<std::vector<std::vector<double>>> floyd_warshall(const graph_oracle& g) {
  const index_t v = g.vertex_count();
  std::vector<std::vector<double>> d(v, std::vector<double>(v, kInf));
  for (index_t i = 0; i < v; ++i) d[i][i] = 0.0;
  for (index_t u = 0; u < v; ++u)
    for (index_t k = 0; k < g.out_degree(u); ++k) {
      const auto [t, w] = g.out_edge(u, k);
      d[u][t] = std::min(d[u][t], w);
    }
  for (index_t k = 0; k < v; ++k)
    for (index_t i = 0; i < v; ++i) {
      if (d[i][k] == kInf) continue;
      for (index_t j = 0; j < v; ++j) {
        if (d[k][j] == kInf) continue;
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  for (index_t i = 0; i < v; ++i)
    if (d[i][i] < 0.0) return std::nullopt;
  return d;
}

// Hopcroft-Karp maximum bipartite matching size.
inline index_t hopcroft_karp_size(const graph_oracle& g) {
  const index_t left = *g.left_size();
  const index_t right = g.vertex_count() - left;
  constexpr index_t kNone = ~index_t{0};
  std::vector<index_t> match_l(left, kNone), match_r(right, kNone);
  std::vector<index_t> level(left);

  const auto bfs_layers = [&]() {
    std::deque<index_t> queue;
    bool found = false;
    for (index_t u = 0; u < left; ++u) {
      level[u] = match_l[u] == kNone ? 0 : kNone;
      if (level[u] == 0) queue.push_back(u);
    }
    while (!queue.empty()) {
      const index_t u = queue.front();
      queue.pop_front();
      for (index_t k = 0; k < g.out_degree(u); ++k) {
        const index_t r = g.out_edge(u, k).first - left;
        if (match_r[r] == kNone) {
          found = true;
        } else if (level[match_r[r]] == kNone) {
          level[match_r[r]] = level[u] + 1;
          queue.push_back(match_r[r]);
        }
      }
    }
    return found;
  };

  const auto dfs_augment = [&](auto&& self, index_t u) -> bool {
    for (index_t k = 0; k < g.out_degree(u); ++k) {
      const index_t r = g.out_edge(u, k).first - left;
      if (match_r[r] == kNone || (level[match_r[r]] == level[u] + 1 && self(self, match_r[r]))) {
        match_l[u] = r;
        match_r[r] = u;
        return true;
      }
    }
    level[u] = kNone;
    return false;
  };

  index_t size = 0;
  while (bfs_layers()) {
    for (index_t u = 0; u < left; ++u)
      if (match_l[u] == kNone && dfs_augment(dfs_augment, u)) ++size;
  }
  return size;
}

inline double coinchange_dp(const std::vector<std::int64_t>& coins, std::int64_t target) {
  std::vector<double> table(target + 1, kInf);
  table[0] = 0.0;
  for (std::int64_t d = 1; d <= target; ++d)
    for (std::int64_t c : coins)
      if (d >= c && table[d - c] + 1.0 < table[d]) table[d] = table[d - c] + 1.0;
  return table[target];
}

inline double subarray_max_sum(const std::vector<std::vector<double>>& a) {
  const std::int64_t n = a.size();
  double best = -kInf;
  for (std::int64_t miny = 0; miny < n; ++miny)
    for (std::int64_t minx = 0; minx < n; ++minx)
      for (std::int64_t maxy = miny; maxy < n; ++maxy)
        for (std::int64_t maxx = minx; maxx < n; ++maxx) {
          double sum = 0.0;
          for (std::int64_t i = miny; i <= maxy; ++i)
            for (std::int64_t j = minx; j <= maxx; ++j) sum += a[i][j];
          best = std::max(best, sum);
        }
  return best;
}

inline bool threesum_cubic(const std::vector<std::int64_t>& values) {
  const std::size_t n = values.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (values[i] + values[j] + values[k] == 0) return true;
  return false;
}

// Most points on one line, by counting collinear points for every pair.
inline index_t maxpoints_brute(const std::vector<std::array<std::int64_t, 2>>& pts) {
  const std::size_t n = pts.size();
  index_t best = n >= 1 ? 1 : 0;
  if (n >= 2) best = 2;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      index_t on_line = 2;
      for (std::size_t k = j + 1; k < n; ++k) {
        const std::int64_t ax = pts[j][0] - pts[i][0], ay = pts[j][1] - pts[i][1];
        const std::int64_t bx = pts[k][0] - pts[i][0], by = pts[k][1] - pts[i][1];
        if (ax * by - ay * bx == 0) ++on_line;
      }
      best = std::max(best, on_line);
    }
  return best;
}

// Cheapest element per distinct group, returned as (value, group) sorted by
// value: the unique no-improvement-possible answer set when values are
// distinct.
template <typename Group>
std::vector<std::pair<double, Group>> mindiff_reference(const std::vector<double>& f,
                                                        const std::vector<Group>& g, index_t d) {
  std::map<Group, double> cheapest;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto it = cheapest.find(g[i]);
    if (it == cheapest.end() || f[i] < it->second) cheapest[g[i]] = f[i];
  }
  std::vector<std::pair<double, Group>> best;
  best.reserve(cheapest.size());
  for (const auto& [group, value] : cheapest) best.push_back({value, group});
  std::sort(best.begin(), best.end());
  if (best.size() > d) best.resize(d);
  return best;
}

}  // namespace groversim::classical

#endif
