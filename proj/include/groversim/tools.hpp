#ifndef GROVERSIM_TOOLS_HPP
#define GROVERSIM_TOOLS_HPP

#include <cmath>
#include <cstdint>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "groversim/core.hpp"
#include "groversim/primitives.hpp"

// The algorithmic toolbox built on the search primitives: existence search,
// minimum finding, exhaustive solution listing, d-cheapest-per-group search
// and the 3SUM decision, all with explicit failure budgets.

namespace groversim {

struct search_params {
  std::uint64_t bbht_attempts = 2;  // r: BBHT tries before falling back to BCWZ
  bbht_config bbht;
};

// Existence search: up to r BBHT attempts, then one BCWZ with the caller's
// budget.  Any returned index satisfies the oracle; with M > 0 solutions the
// whole cascade fails with probability at most .5^r * M^(-.93 r) * eps.
template <binary_oracle O>
search_outcome findsol(const O& o, epsilon_budget budget, meter& m, rng_stream& rng,
                       const search_params& params = {}) {
  if (o.size() == 0) throw std::invalid_argument("findsol: empty domain");
  search_outcome total;
  for (std::uint64_t attempt = 0; attempt < params.bbht_attempts; ++attempt) {
    const search_outcome got = bbht(o, params.bbht, m, rng);
    total.charged_cost += got.charged_cost;
    total.rounds += got.rounds;
    if (got.found()) {
      total.result = got.result;
      return total;
    }
  }
  const search_outcome got = bcwz(o, budget, m, rng);
  total.charged_cost += got.charged_cost;
  total.rounds += got.rounds;
  total.result = got.result;
  return total;
}

struct minfind_result {
  index_t arg = 0;
  double value = 0.0;
  // Pivot trail, strictly decreasing in value; exposed for invariant checks.
  std::vector<std::pair<index_t, double>> descent;
};

// Minimum finding by repeated descent: findsol for a strictly better element
// until none is reported.  Each pivot evaluation is itself one call to F and
// is charged as such.
template <valued_oracle O>
minfind_result minfind(const O& o, epsilon_budget budget, meter& m, rng_stream& rng,
                       const search_params& params = {}) {
  const index_t n = o.size();
  if (n == 0) throw std::invalid_argument("minfind: empty domain");

  minfind_result res;
  res.arg = rng.below(n);
  res.value = static_cast<double>(o.value(res.arg));
  m.charged_queries += o.weight();
  res.descent.push_back({res.arg, res.value});

  for (;;) {
    const double pivot = res.value;
    const auto better = make_oracle(
        n, [&o, pivot](index_t x) { return static_cast<double>(o.value(x)) < pivot ? 1 : 0; }, o.weight());
    const search_outcome got = findsol(better, budget, m, rng, params);
    if (!got.found()) return res;
    res.arg = *got.result;
    res.value = static_cast<double>(o.value(res.arg));
    m.charged_queries += o.weight();
    res.descent.push_back({res.arg, res.value});
  }
}

// Reusable found-set for the array-storage findall variant: a flag per
// domain element plus a queue of touched entries so wiping costs only as
// much as was written.
class scratch_flags {
 public:
  explicit scratch_flags(index_t capacity) : flags_(capacity, 0) {}

  index_t capacity() const { return flags_.size(); }
  bool test(index_t i) const { return flags_[i] != 0; }

  void set(index_t i) {
    if (!flags_[i]) {
      flags_[i] = 1;
      touched_.push_back(i);
    }
  }

  void wipe() {
    for (index_t i : touched_) flags_[i] = 0;
    touched_.clear();
  }

 private:
  std::vector<std::uint8_t> flags_;
  std::vector<index_t> touched_;
};

namespace detail {

template <binary_oracle O, typename Contains, typename Insert>
std::vector<index_t> findall_impl(const O& o, epsilon_budget budget, meter& m, rng_stream& rng,
                                  const search_params& params, Contains contains, Insert insert) {
  std::vector<index_t> found;
  for (;;) {
    const auto fresh = make_oracle(
        o.size(), [&o, &contains](index_t x) { return o.value(x) != 0 && !contains(x) ? 1 : 0; }, o.weight());
    const search_outcome got = findsol(fresh, budget, m, rng, params);
    if (!got.found()) return found;
    insert(*got.result);
    found.push_back(*got.result);
  }
}

}  // namespace detail

// Find every solution, hash-table storage.  Returned indices satisfy the
// oracle and are distinct; the set is complete with probability >= 1 - eps.
template <binary_oracle O>
std::vector<index_t> findall(const O& o, epsilon_budget budget, meter& m, rng_stream& rng,
                             const search_params& params = {}) {
  if (o.size() == 0) throw std::invalid_argument("findall: empty domain");
  std::unordered_set<index_t> seen;
  return detail::findall_impl(
      o, budget, m, rng, params, [&seen](index_t x) { return seen.contains(x); },
      [&seen](index_t x) { seen.insert(x); });
}

// Array-storage variant for repeated calls; wipes the scratch before
// returning so the next call starts clean.
template <binary_oracle O>
std::vector<index_t> findall(const O& o, epsilon_budget budget, meter& m, rng_stream& rng,
                             scratch_flags& seen, const search_params& params = {}) {
  if (o.size() == 0) throw std::invalid_argument("findall: empty domain");
  if (seen.capacity() < o.size()) throw std::invalid_argument("findall: scratch smaller than domain");
  auto found = detail::findall_impl(
      o, budget, m, rng, params, [&seen](index_t x) { return seen.test(x); },
      [&seen](index_t x) { seen.set(x); });
  seen.wipe();
  return found;
}

// One answer slot of mindiff.  Slots start as fictitious placeholders with
// value +inf; a fictitious slot never equals any real group.
template <typename Group>
struct mindiff_entry {
  std::int64_t index = -1;  // negative while fictitious
  double f_value = kInf;
  Group group{};

  bool fictitious() const { return index < 0; }
};

struct mindiff_params {
  double c1 = 9.0;  // pass ends after c1*sqrt(N*d) charged F-evaluations ...
  double c2 = 6.0;  // ... or c2*d*lg(N) inner iterations, whichever first
  search_params search;
};

template <typename Group>
struct mindiff_result {
  std::vector<mindiff_entry<Group>> entries;
  std::uint64_t passes = 0;  // outer repetitions until certified; 1 when the first pass sufficed
};

// d cheapest elements with pairwise-distinct group labels.  Interleaves
// BBHT rounds against the current answer array with a findsol certificate;
// a pass that fails certification repeats after applying the witness.
// Real entries always carry distinct groups; if fewer than d groups exist,
// the surplus slots stay fictitious.
template <valued_oracle F, group_oracle G>
auto mindiff(const F& f, const G& g, index_t d, epsilon_budget budget, meter& m, rng_stream& rng,
             const mindiff_params& params = {}) {
  using group_t = std::decay_t<decltype(g.value(index_t{0}))>;
  const index_t n = f.size();
  if (n == 0) throw std::invalid_argument("mindiff: empty domain");
  if (d == 0) throw std::invalid_argument("mindiff: d must be positive");
  if (g.size() != n) throw std::invalid_argument("mindiff: group oracle domain mismatch");

  mindiff_result<group_t> result;
  auto& answers = result.entries;
  answers.resize(d);
  for (index_t i = 0; i < d; ++i) answers[i].index = -1 - static_cast<std::int64_t>(i);

  std::unordered_map<group_t, std::size_t> positions;  // real group -> slot
  std::set<std::pair<double, std::size_t>> by_value;   // (f, slot), max at rbegin
  for (std::size_t i = 0; i < d; ++i) by_value.insert({kInf, i});

  // Improvement conditions against the current answers: either y beats the
  // slot already holding its group, or y's group is new and y beats the
  // current worst slot.  State mutates only between search invocations.
  double worst = kInf;
  const auto improving = make_oracle(
      n,
      [&](index_t y) {
        const double fy = static_cast<double>(f.value(y));
        const auto it = positions.find(g.value(y));
        if (it != positions.end()) return fy < answers[it->second].f_value ? 1 : 0;
        return fy < worst ? 1 : 0;
      },
      f.weight());

  const auto apply = [&](index_t y) {
    const double fy = static_cast<double>(f.value(y));
    const group_t gy = g.value(y);
    std::size_t slot;
    const auto it = positions.find(gy);
    if (it != positions.end()) {
      slot = it->second;
    } else {
      slot = by_value.rbegin()->second;  // evict the worst slot
      if (!answers[slot].fictitious()) positions.erase(answers[slot].group);
      positions.emplace(gy, slot);
    }
    by_value.erase({answers[slot].f_value, slot});
    answers[slot] = mindiff_entry<group_t>{static_cast<std::int64_t>(y), fy, gy};
    by_value.insert({fy, slot});
  };

  const double eval_cap = params.c1 * std::sqrt(static_cast<double>(n) * static_cast<double>(d));
  const double iter_cap =
      params.c2 * static_cast<double>(d) * std::log2(static_cast<double>(n < 2 ? 2 : n));
  const std::uint64_t weight = f.weight();

  for (;;) {
    ++result.passes;
    std::uint64_t evals = 0;
    double iters = 0.0;
    while (static_cast<double>(evals) < eval_cap && iters < iter_cap) {
      worst = by_value.rbegin()->first;
      const std::uint64_t before = m.charged_queries;
      const search_outcome got = bbht(improving, params.search.bbht, m, rng);
      evals += (m.charged_queries - before) / weight;
      iters += 1.0;
      if (got.found()) apply(*got.result);
    }
    worst = by_value.rbegin()->first;
    const search_outcome certificate = findsol(improving, budget, m, rng, params.search);
    if (!certificate.found()) return result;
    apply(*certificate.result);
  }
}

// 3SUM decision: is there a triple of distinct indices whose values sum to
// zero?  Searched over the N^2 pair domain (i, j); pairs on or below the
// diagonal are non-solutions, the third index comes from a value-count map.
inline bool threesum(const std::vector<std::int64_t>& values, epsilon_budget budget, meter& m,
                     rng_stream& rng, const search_params& params = {}) {
  if (values.empty()) throw std::invalid_argument("threesum: empty input");
  const index_t n = values.size();
  std::unordered_map<std::int64_t, index_t> counts;
  for (std::int64_t v : values) ++counts[v];

  const auto pair_oracle = make_oracle(n * n, [&](index_t code) {
    const index_t i = code / n;
    const index_t j = code % n;
    if (i >= j) return 0;
    const std::int64_t target = -(values[i] + values[j]);
    const auto it = counts.find(target);
    if (it == counts.end()) return 0;
    index_t available = it->second;
    if (values[i] == target) --available;
    if (values[j] == target) --available;
    return available > 0 ? 1 : 0;
  });
  return findsol(pair_oracle, budget, m, rng, params).found();
}

}  // namespace groversim

#endif
