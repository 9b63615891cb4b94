#ifndef GROVERSIM_GRAPH_HPP
#define GROVERSIM_GRAPH_HPP

#include <cmath>
#include <cstdint>
#include <deque>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "groversim/core.hpp"
#include "groversim/tools.hpp"

// Graph oracles in the adjacency-matrix and edge-list query models, plus the
// search and shortest-path algorithms built on them.  All probabilistic
// guarantees thread failure budgets exactly as each algorithm requires.

namespace groversim {

enum class graph_model { matrix, edgelist };

struct graph_edge {
  index_t from = 0;
  index_t to = 0;
  double weight = 1.0;
};

// Simple graph (no self-edges, at most one edge per ordered pair), directed
// or undirected, optionally weighted, optionally carrying a bipartite
// left/right split.  Exposes both query models of the search algorithms.
class graph_oracle {
 public:
  static graph_oracle build(index_t vertices, bool directed, bool weighted, std::vector<graph_edge> edges,
                            std::optional<index_t> left_size = std::nullopt) {
    graph_oracle g;
    g.vertices_ = vertices;
    g.directed_ = directed;
    g.weighted_ = weighted;
    g.left_ = left_size;
    g.edges_ = std::move(edges);
    if (left_size && *left_size > vertices) throw std::invalid_argument("graph: left side larger than graph");

    g.exists_.assign(vertices * vertices, 0);
    g.weight_.assign(vertices * vertices, kInf);
    g.out_.assign(vertices, {});
    g.in_.assign(vertices, {});
    for (const graph_edge& e : g.edges_) {
      if (e.from >= vertices || e.to >= vertices) throw std::invalid_argument("graph: vertex out of range");
      if (e.from == e.to) throw std::invalid_argument("graph: self-edges not allowed");
      if (left_size && (e.from < *left_size) == (e.to < *left_size))
        throw std::invalid_argument("graph: edge does not cross the declared partition");
      g.add_arc(e.from, e.to, e.weight);
      if (!directed) g.add_arc(e.to, e.from, e.weight);
    }
    return g;
  }

  index_t vertex_count() const { return vertices_; }
  index_t edge_count() const { return edges_.size(); }
  bool directed() const { return directed_; }
  bool weighted() const { return weighted_; }
  std::optional<index_t> left_size() const { return left_; }
  const std::vector<graph_edge>& edges() const { return edges_; }

  // Matrix view.
  bool has_edge(index_t u, index_t v) const { return exists_[u * vertices_ + v] != 0; }
  double edge_weight(index_t u, index_t v) const { return weight_[u * vertices_ + v]; }

  // Edge-list view.
  index_t out_degree(index_t u) const { return out_[u].size(); }
  std::pair<index_t, double> out_edge(index_t u, index_t k) const { return out_[u][k]; }
  index_t in_degree(index_t u) const { return in_[u].size(); }
  std::pair<index_t, double> in_edge(index_t u, index_t k) const { return in_[u][k]; }

  index_t max_out_degree() const {
    index_t best = 0;
    for (const auto& adj : out_) best = std::max<index_t>(best, adj.size());
    return best;
  }

  bool has_negative_weight() const {
    for (const graph_edge& e : edges_)
      if (e.weight < 0.0) return true;
    return false;
  }

 private:
  void add_arc(index_t u, index_t v, double w) {
    if (exists_[u * vertices_ + v]) throw std::invalid_argument("graph: duplicate edge");
    exists_[u * vertices_ + v] = 1;
    weight_[u * vertices_ + v] = w;
    out_[u].push_back({v, w});
    in_[v].push_back({u, w});
  }

  index_t vertices_ = 0;
  bool directed_ = false;
  bool weighted_ = false;
  std::optional<index_t> left_;
  std::vector<graph_edge> edges_;
  std::vector<std::uint8_t> exists_;
  std::vector<double> weight_;
  std::vector<std::vector<std::pair<index_t, double>>> out_;
  std::vector<std::vector<std::pair<index_t, double>>> in_;
};

// Text format: `V E directed|undirected weighted|unweighted`, an optional
// `left L` line for bipartite graphs, then E lines `u v [w]`.
inline graph_oracle parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  const auto next_line = [&]() -> std::string {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
    }
    throw parse_error(line_no + 1, "unexpected end of file");
  };

  const auto try_next_line = [&]() -> std::optional<std::string> {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
    }
    return std::nullopt;
  };

  std::istringstream head(next_line());
  index_t v = 0, e = 0;
  std::string direction, weighting;
  if (!(head >> v >> e >> direction >> weighting))
    throw parse_error(line_no, "expected `V E directed|undirected weighted|unweighted`");
  if (direction != "directed" && direction != "undirected")
    throw parse_error(line_no, "direction must be `directed` or `undirected`");
  if (weighting != "weighted" && weighting != "unweighted")
    throw parse_error(line_no, "weighting must be `weighted` or `unweighted`");
  const bool directed = direction == "directed";
  const bool weighted = weighting == "weighted";

  // The line after the header is either the optional `left L` marker or the
  // first edge.
  std::optional<index_t> left;
  std::optional<std::string> pending = try_next_line();
  if (pending) {
    std::istringstream probe(*pending);
    std::string tag;
    probe >> tag;
    if (tag == "left") {
      index_t l = 0;
      if (!(probe >> l)) throw parse_error(line_no, "expected `left L`");
      left = l;
      pending.reset();
    }
  }

  std::vector<graph_edge> edges;
  edges.reserve(e);
  for (index_t k = 0; k < e; ++k) {
    std::string text;
    if (pending) {
      text = *pending;
      pending.reset();
    } else {
      text = next_line();
    }
    std::istringstream row(text);
    graph_edge edge;
    if (!(row >> edge.from >> edge.to)) throw parse_error(line_no, "expected `u v [w]`");
    if (weighted && !(row >> edge.weight)) throw parse_error(line_no, "weighted graph edge lacks a weight");
    edges.push_back(edge);
  }
  try {
    return graph_oracle::build(v, directed, weighted, std::move(edges), left);
  } catch (const std::invalid_argument& bad) {
    throw parse_error(line_no, bad.what());
  }
}

namespace detail {

// Searchable oracle over the neighbours of u that satisfy `keep`.  In the
// matrix model the domain is every vertex; in the edge-list model it is the
// out-edge slots of u.  Each evaluation is one graph query.
template <typename Keep>
auto neighbour_oracle(const graph_oracle& g, graph_model model, index_t u, Keep keep) {
  const bool matrix = model == graph_model::matrix;
  const index_t domain = matrix ? g.vertex_count() : g.out_degree(u);
  return make_oracle(domain, [&g, matrix, u, keep](index_t slot) {
    const index_t v = matrix ? slot : g.out_edge(u, slot).first;
    if (matrix && !g.has_edge(u, v)) return 0;
    return keep(v) ? 1 : 0;
  });
}

inline index_t neighbour_vertex(const graph_oracle& g, graph_model model, index_t u, index_t slot) {
  return model == graph_model::matrix ? slot : g.out_edge(u, slot).first;
}

}  // namespace detail

// Breadth-first search.  Queue-driven; the unvisited neighbours of each
// dequeued vertex are collected with the array-storage findall at parameter
// V*eps_inv.  Visited vertices are always reachable and visited once.
inline std::vector<index_t> bfs(const graph_oracle& g, graph_model model, index_t source,
                                epsilon_budget budget, meter& m, rng_stream& rng,
                                const search_params& params = {}) {
  const index_t v = g.vertex_count();
  if (source >= v) throw std::invalid_argument("bfs: source out of range");
  const epsilon_budget sub = budget.scaled(static_cast<double>(v));

  std::vector<std::uint8_t> visited(v, 0);
  scratch_flags scratch(v);
  std::vector<index_t> order;
  std::deque<index_t> queue;
  visited[source] = 1;
  queue.push_back(source);

  while (!queue.empty()) {
    const index_t u = queue.front();
    queue.pop_front();
    order.push_back(u);
    if (model == graph_model::edgelist && g.out_degree(u) == 0) continue;
    const auto unvisited =
        detail::neighbour_oracle(g, model, u, [&visited](index_t t) { return visited[t] == 0; });
    for (index_t slot : findall(unvisited, sub, m, rng, scratch, params)) {
      const index_t t = detail::neighbour_vertex(g, model, u, slot);
      visited[t] = 1;
      queue.push_back(t);
    }
  }
  return order;
}

struct dfs_result {
  std::vector<index_t> order;
  std::vector<std::int64_t> parent;  // -1 for the root and unvisited vertices
};

// Depth-first search, recursive; each unvisited-neighbour probe is a findsol
// at parameter 2V*eps_inv.
inline dfs_result dfs(const graph_oracle& g, graph_model model, index_t source, epsilon_budget budget,
                      meter& m, rng_stream& rng, const search_params& params = {}) {
  const index_t v = g.vertex_count();
  if (source >= v) throw std::invalid_argument("dfs: source out of range");
  const epsilon_budget sub = budget.scaled(2.0 * static_cast<double>(v));

  dfs_result res;
  res.parent.assign(v, -1);
  std::vector<std::uint8_t> visited(v, 0);

  const auto body = [&](auto&& self, index_t u) -> void {
    visited[u] = 1;
    res.order.push_back(u);
    if (model == graph_model::edgelist && g.out_degree(u) == 0) return;
    for (;;) {
      const auto unvisited =
          detail::neighbour_oracle(g, model, u, [&visited](index_t t) { return visited[t] == 0; });
      const search_outcome got = findsol(unvisited, sub, m, rng, params);
      if (!got.found()) return;
      const index_t t = detail::neighbour_vertex(g, model, u, *got.result);
      res.parent[t] = static_cast<std::int64_t>(u);
      self(self, t);
    }
  };
  body(body, source);
  return res;
}

struct dist_array {
  std::vector<double> dist;         // +inf for unreachable
  std::vector<std::int64_t> from;   // predecessor, -1 for source/unreachable
};

namespace detail {

// Valued oracle over the predecessors of i: dist[j] + w(j, i), +inf where no
// edge exists.  Domain is the incoming-edge array in the edge-list model and
// the whole vertex set in the matrix model.
inline auto predecessor_oracle(const graph_oracle& g, graph_model model, index_t i,
                               const std::vector<double>& dist) {
  const bool matrix = model == graph_model::matrix;
  const index_t domain = matrix ? g.vertex_count() : g.in_degree(i);
  return make_oracle(domain, [&g, matrix, i, &dist](index_t slot) {
    index_t j;
    double w;
    if (matrix) {
      j = slot;
      if (!g.has_edge(j, i)) return kInf;
      w = g.edge_weight(j, i);
    } else {
      const auto [src, weight] = g.in_edge(i, slot);
      j = src;
      w = weight;
    }
    return dist[j] == kInf ? kInf : dist[j] + w;
  });
}

inline index_t predecessor_vertex(const graph_oracle& g, graph_model model, index_t i, index_t slot) {
  return model == graph_model::matrix ? slot : g.in_edge(i, slot).first;
}

// Rebuild distances by replaying the predecessor chains, so the returned
// array is always realizable by `from`.  A cycle in `from` certifies a
// negative cycle.
inline std::optional<dist_array> finalize_chains(const graph_oracle& g, index_t source, dist_array d) {
  const index_t v = g.vertex_count();
  std::vector<std::uint8_t> state(v, 0);  // 0 fresh, 1 on stack, 2 resolved
  std::vector<double> chain(v, kInf);
  std::vector<index_t> stack;
  for (index_t i = 0; i < v; ++i) {
    if (state[i]) continue;
    stack.clear();
    index_t cur = i;
    while (true) {
      if (state[cur] == 1) return std::nullopt;  // predecessor loop
      if (state[cur] == 2) break;
      state[cur] = 1;
      stack.push_back(cur);
      if (d.from[cur] < 0) {
        chain[cur] = cur == source ? 0.0 : kInf;
        break;
      }
      cur = static_cast<index_t>(d.from[cur]);
    }
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
      if (state[*it] == 2) continue;
      if (d.from[*it] >= 0) {
        const index_t p = static_cast<index_t>(d.from[*it]);
        chain[*it] = chain[p] == kInf ? kInf : chain[p] + g.edge_weight(p, *it);
      }
      state[*it] = 2;
    }
  }
  d.dist = std::move(chain);
  return d;
}

}  // namespace detail

// Single-source shortest paths allowing negative edge weights.  V-1 rounds
// of per-vertex minfind (parameter V^2*eps_inv) over incoming edges, then one
// detection round: any further improvement means a reachable negative cycle
// and the result is "false" (nullopt).
inline std::optional<dist_array> spnw(const graph_oracle& g, graph_model model, index_t source,
                                      epsilon_budget budget, meter& m, rng_stream& rng,
                                      const search_params& params = {}) {
  const index_t v = g.vertex_count();
  if (source >= v) throw std::invalid_argument("spnw: source out of range");
  const epsilon_budget sub = budget.scaled(static_cast<double>(v) * static_cast<double>(v));

  dist_array d;
  d.dist.assign(v, kInf);
  d.from.assign(v, -1);
  d.dist[source] = 0.0;

  const auto best_predecessor = [&](index_t i) -> std::optional<std::pair<index_t, double>> {
    if (model == graph_model::edgelist && g.in_degree(i) == 0) return std::nullopt;
    const auto candidates = detail::predecessor_oracle(g, model, i, d.dist);
    const minfind_result best = minfind(candidates, sub, m, rng, params);
    if (best.value == kInf) return std::nullopt;
    return std::make_pair(detail::predecessor_vertex(g, model, i, best.arg), best.value);
  };

  for (index_t round = 1; round < v; ++round) {
    for (index_t i = 0; i < v; ++i) {
      const auto best = best_predecessor(i);
      if (best && best->second < d.dist[i]) {
        d.dist[i] = best->second;
        d.from[i] = static_cast<std::int64_t>(best->first);
      }
    }
  }
  for (index_t i = 0; i < v; ++i) {
    const auto best = best_predecessor(i);
    if (best && best->second < d.dist[i]) return std::nullopt;  // still relaxing: negative cycle
  }
  return detail::finalize_chains(g, source, std::move(d));
}

// Nonnegative-weight single-source shortest paths: Dijkstra with the
// settle-next-vertex choice delegated to minfind (parameter V^2*eps_inv) over
// (settled vertex, out-edge slot) pairs.
inline dist_array sssp_nonneg(const graph_oracle& g, graph_model model, index_t source,
                              epsilon_budget budget, meter& m, rng_stream& rng,
                              const search_params& params = {}) {
  const index_t v = g.vertex_count();
  if (source >= v) throw std::invalid_argument("sssp_nonneg: source out of range");
  if (g.has_negative_weight()) throw std::invalid_argument("sssp_nonneg: negative weight present");
  const epsilon_budget sub = budget.scaled(static_cast<double>(v) * static_cast<double>(v));

  dist_array d;
  d.dist.assign(v, kInf);
  d.from.assign(v, -1);
  d.dist[source] = 0.0;

  std::vector<std::uint8_t> settled(v, 0);
  settled[source] = 1;

  const bool matrix = model == graph_model::matrix;
  const index_t stride = matrix ? v : g.max_out_degree();
  if (stride == 0) return d;

  const auto frontier = make_oracle(v * stride, [&](index_t code) {
    const index_t u = code / stride;
    const index_t slot = code % stride;
    if (!settled[u]) return kInf;
    index_t t;
    double w;
    if (matrix) {
      t = slot;
      if (!g.has_edge(u, t)) return kInf;
      w = g.edge_weight(u, t);
    } else {
      if (slot >= g.out_degree(u)) return kInf;
      const auto [target, weight] = g.out_edge(u, slot);
      t = target;
      w = weight;
    }
    if (settled[t]) return kInf;
    return d.dist[u] + w;
  });

  for (index_t settles = 1; settles < v; ++settles) {
    const minfind_result best = minfind(frontier, sub, m, rng, params);
    if (best.value == kInf) break;  // nothing reachable remains
    const index_t u = best.arg / stride;
    const index_t slot = best.arg % stride;
    const index_t t = matrix ? slot : g.out_edge(u, slot).first;
    d.dist[t] = best.value;
    d.from[t] = static_cast<std::int64_t>(u);
    settled[t] = 1;
  }
  return d;
}

// All-pairs shortest paths via reweighting: one spnw from a virtual source
// (parameter (V+1)*eps_inv) supplies potentials, then one nonnegative
// Dijkstra per origin (each also (V+1)*eps_inv).  "false" when a negative
// cycle exists.
inline std::optional<std::vector<std::vector<double>>> apsp(const graph_oracle& g, graph_model model,
                                                            epsilon_budget budget, meter& m,
                                                            rng_stream& rng,
                                                            const search_params& params = {}) {
  const index_t v = g.vertex_count();
  if (v == 0) return std::vector<std::vector<double>>{};
  const epsilon_budget sub = budget.scaled(static_cast<double>(v) + 1.0);

  std::vector<graph_edge> augmented;
  augmented.reserve(g.edges().size() * 2 + v);
  for (const graph_edge& e : g.edges()) {
    augmented.push_back(e);
    if (!g.directed()) augmented.push_back({e.to, e.from, e.weight});
  }
  for (index_t u = 0; u < v; ++u) augmented.push_back({v, u, 0.0});
  const graph_oracle with_virtual = graph_oracle::build(v + 1, true, true, std::move(augmented));

  const auto potentials = spnw(with_virtual, model, v, sub, m, rng, params);
  if (!potentials) return std::nullopt;
  const std::vector<double>& h = potentials->dist;

  std::vector<graph_edge> reweighted;
  reweighted.reserve(g.edges().size() * 2);
  for (const graph_edge& e : g.edges()) {
    // A failed potentials run can leave w' slightly negative; clamp so the
    // Dijkstra sweep still runs (the trial then just mismatches its oracle).
    reweighted.push_back({e.from, e.to, std::max(0.0, e.weight + h[e.from] - h[e.to])});
    if (!g.directed())
      reweighted.push_back({e.to, e.from, std::max(0.0, e.weight + h[e.to] - h[e.from])});
  }
  const graph_oracle forward = graph_oracle::build(v, true, true, std::move(reweighted));

  std::vector<std::vector<double>> out(v, std::vector<double>(v, kInf));
  for (index_t u = 0; u < v; ++u) {
    const dist_array d = sssp_nonneg(forward, model, u, sub, m, rng, params);
    for (index_t t = 0; t < v; ++t)
      out[u][t] = d.dist[t] == kInf ? kInf : d.dist[t] - h[u] + h[t];
  }
  return out;
}

struct matching {
  std::vector<std::int64_t> pair_left;   // right partner of each left vertex, -1 if single
  std::vector<std::int64_t> pair_right;  // left partner of each right vertex, -1 if single

  index_t size() const {
    index_t n = 0;
    for (std::int64_t p : pair_left) n += p >= 0 ? 1 : 0;
    return n;
  }
};

// Maximum bipartite matching, Hopcroft-Karp with the layer construction and
// augmenting-path probes replaced by findall/findsol at parameter
// (4*sqrt(V))*eps_inv.  The returned matching is always valid; it is maximum
// with probability >= 1 - eps.
inline matching bipartite_matching(const graph_oracle& g, epsilon_budget budget, meter& m,
                                   rng_stream& rng, graph_model model = graph_model::edgelist,
                                   const search_params& params = {}) {
  if (!g.left_size()) throw std::invalid_argument("bipartite_matching: graph lacks a left/right split");
  const index_t v = g.vertex_count();
  const index_t left = *g.left_size();
  const epsilon_budget sub = budget.scaled(4.0 * std::sqrt(static_cast<double>(v < 1 ? 1 : v)));
  constexpr index_t kUnreached = ~index_t{0};

  matching mt;
  mt.pair_left.assign(left, -1);
  mt.pair_right.assign(v - left, -1);

  std::vector<index_t> layer(left, kUnreached);
  std::vector<std::uint8_t> seen_right(v - left, 0);
  std::vector<std::uint8_t> used_right(v - left, 0);
  scratch_flags scratch(v);
  index_t limit = kUnreached;

  const auto right_of = [left](index_t vertex) { return vertex - left; };

  // Alternating-level construction from the unmatched left vertices; fills
  // `layer` and the length of the shortest augmenting path, if any.
  const auto build_layers = [&]() {
    std::fill(layer.begin(), layer.end(), kUnreached);
    std::fill(seen_right.begin(), seen_right.end(), 0);
    limit = kUnreached;
    std::deque<index_t> queue;
    for (index_t u = 0; u < left; ++u) {
      if (mt.pair_left[u] < 0) {
        layer[u] = 0;
        queue.push_back(u);
      }
    }
    while (!queue.empty()) {
      const index_t u = queue.front();
      queue.pop_front();
      if (layer[u] >= limit) continue;
      if (model == graph_model::edgelist && g.out_degree(u) == 0) continue;
      const auto fresh = detail::neighbour_oracle(
          g, model, u, [&](index_t t) { return t >= left && !seen_right[right_of(t)]; });
      for (index_t slot : findall(fresh, sub, m, rng, scratch, params)) {
        const index_t t = detail::neighbour_vertex(g, model, u, slot);
        seen_right[right_of(t)] = 1;
        const std::int64_t w = mt.pair_right[right_of(t)];
        if (w < 0) {
          limit = std::min(limit, layer[u]);
        } else if (layer[w] == kUnreached) {
          layer[w] = layer[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return limit != kUnreached;
  };

  // Shortest-path-only augmenting probe from left vertex u.
  const auto augment = [&](auto&& self, index_t u) -> bool {
    for (;;) {
      if (model == graph_model::edgelist && g.out_degree(u) == 0) {
        layer[u] = kUnreached;
        return false;
      }
      const auto viable = detail::neighbour_oracle(g, model, u, [&](index_t t) {
        if (t < left || used_right[right_of(t)]) return false;
        const std::int64_t w = mt.pair_right[right_of(t)];
        if (w < 0) return layer[u] == limit;
        return layer[w] == layer[u] + 1;
      });
      const search_outcome got = findsol(viable, sub, m, rng, params);
      if (!got.found()) {
        layer[u] = kUnreached;
        return false;
      }
      const index_t t = detail::neighbour_vertex(g, model, u, *got.result);
      used_right[right_of(t)] = 1;
      const std::int64_t w = mt.pair_right[right_of(t)];
      if (w < 0 || self(self, static_cast<index_t>(w))) {
        mt.pair_left[u] = static_cast<std::int64_t>(t);
        mt.pair_right[right_of(t)] = static_cast<std::int64_t>(u);
        return true;
      }
    }
  };

  while (build_layers()) {
    std::fill(used_right.begin(), used_right.end(), 0);
    index_t augmented = 0;
    for (index_t u = 0; u < left; ++u) {
      if (mt.pair_left[u] < 0 && layer[u] == 0 && augment(augment, u)) ++augmented;
    }
    if (augmented == 0) break;  // every probe failed; stop rather than spin
  }
  return mt;
}

}  // namespace groversim

#endif
