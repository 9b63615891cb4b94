#ifndef GROVERSIM_CORE_HPP
#define GROVERSIM_CORE_HPP

#include <concepts>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

// Foundation types shared by every algorithm in the library: indexable
// domains, metered oracles, deterministic per-trial random streams and
// failure budgets.

namespace groversim {

using index_t = std::uint64_t;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Input-file failure with the offending line number; command-line frontends
// render it as `file:line: message`.
struct parse_error : std::runtime_error {
  std::size_t line;
  parse_error(std::size_t line_no, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + message), line(line_no) {}
};

// Counts synthetic oracle calls ("charged") separately from the full or
// partial scans the simulator performs internally ("peeks").  Peeks never
// enter any cost comparison; only primitives increment charged_queries.
struct meter {
  std::uint64_t charged_queries = 0;
  std::uint64_t classical_peeks = 0;
};

// Inverse failure budget.  eps_inv > 1 so lg(eps_inv) > 0.
struct epsilon_budget {
  double eps_inv;

  explicit epsilon_budget(double inv) : eps_inv(inv) {
    if (!(inv > 1.0)) throw std::invalid_argument("epsilon_budget: eps_inv must exceed 1");
  }
  double eps() const { return 1.0 / eps_inv; }
  // Parameter threading: a routine invoked k times hands each call k*eps_inv.
  epsilon_budget scaled(double k) const { return epsilon_budget(eps_inv * k); }
};

// Deterministic random stream.  Identical (seed, stream_id) pairs replay the
// exact same draws on any platform: mt19937_64 and seed_seq are fully
// specified by the standard, and the uniform draws below avoid the
// implementation-defined std::uniform_*_distribution.
class rng_stream {
 public:
  rng_stream(std::uint64_t seed, std::uint64_t stream_id) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream_id), static_cast<std::uint32_t>(stream_id >> 32)};
    gen_.seed(seq);
  }

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1) with 53-bit resolution.
  double next_unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("rng_stream::below: bound must be positive");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::mt19937_64 gen_;
};

// An oracle is a deterministic function over indices 0..size()-1 plus the
// number of base-oracle queries one evaluation consumes.  Oracles built over
// mutable state (e.g. "not yet found" predicates) must only mutate between
// search invocations so each invocation sees a consistent snapshot.
template <typename O>
concept oracle_like = requires(const O& o, index_t i) {
  { o.size() } -> std::convertible_to<index_t>;
  o.value(i);
  { o.weight() } -> std::convertible_to<std::uint64_t>;
};

// Binary oracles return 0/1; an index with value 1 is a solution.
template <typename O>
concept binary_oracle = oracle_like<O> && requires(const O& o, index_t i) {
  { o.value(i) } -> std::convertible_to<int>;
};

// Valued oracles return the real number being minimized.
template <typename O>
concept valued_oracle = oracle_like<O> && requires(const O& o, index_t i) {
  { o.value(i) } -> std::convertible_to<double>;
};

// Group oracles label each index with an equality-comparable, hashable key.
template <typename O>
concept group_oracle = requires(const O& o, index_t i) {
  { o.size() } -> std::convertible_to<index_t>;
  { o.value(i) == o.value(i) } -> std::convertible_to<bool>;
};

template <typename Fn>
class fn_oracle {
 public:
  fn_oracle(index_t n, Fn fn, std::uint64_t weight = 1) : n_(n), fn_(std::move(fn)), weight_(weight) {
    if (weight_ == 0) throw std::invalid_argument("fn_oracle: weight must be positive");
  }

  index_t size() const { return n_; }
  decltype(auto) value(index_t i) const { return fn_(i); }
  std::uint64_t weight() const { return weight_; }

 private:
  index_t n_;
  Fn fn_;
  std::uint64_t weight_;
};

template <typename Fn>
fn_oracle<Fn> make_oracle(index_t n, Fn fn, std::uint64_t weight = 1) {
  return fn_oracle<Fn>(n, std::move(fn), weight);
}

// Exact solution count by full scan.  Costs one peek per element, never a
// charged query.
template <binary_oracle O>
index_t count_solutions(const O& o, meter& m) {
  const index_t n = o.size();
  m.classical_peeks += n;
  index_t count = 0;
  for (index_t i = 0; i < n; ++i) count += o.value(i) != 0 ? 1 : 0;
  return count;
}

namespace detail {

// k-th index (0-based) whose predicate value matches `want`.
template <binary_oracle O>
index_t nth_with_value(const O& o, bool want, index_t k) {
  const index_t n = o.size();
  for (index_t i = 0; i < n; ++i) {
    if ((o.value(i) != 0) == want) {
      if (k == 0) return i;
      --k;
    }
  }
  throw std::logic_error("nth_with_value: ran out of elements");
}

}  // namespace detail

// Uniform draw from the solution set; errors when the set is empty.
template <binary_oracle O>
index_t sample_solution(const O& o, meter& m, rng_stream& rng) {
  meter scratch;
  const index_t sols = count_solutions(o, scratch);
  if (sols == 0) throw std::invalid_argument("sample_solution: oracle has no solutions");
  m.classical_peeks += o.size();
  return detail::nth_with_value(o, true, rng.below(sols));
}

}  // namespace groversim

#endif
