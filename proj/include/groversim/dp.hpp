#ifndef GROVERSIM_DP_HPP
#define GROVERSIM_DP_HPP

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "groversim/core.hpp"
#include "groversim/tools.hpp"

// Search-accelerated dynamic programming: the coin changer and the maximum
// subarray sum.

namespace groversim {

struct coin_system {
  std::vector<std::int64_t> coins;
  std::int64_t target = 0;
};

inline void validate(const coin_system& cs) {
  if (cs.coins.empty()) throw std::invalid_argument("coin_system: need at least one denomination");
  for (std::int64_t c : cs.coins)
    if (c < 1) throw std::invalid_argument("coin_system: denominations must be positive");
  if (cs.target < 0) throw std::invalid_argument("coin_system: target must be nonnegative");
}

struct coinchange_result {
  double count = 0.0;                    // +inf when the target is unreachable
  std::vector<std::int32_t> first_coin;  // chosen coin per amount, -1 where unreachable
};

// Minimum number of coins for the target amount.  One table entry per
// amount, each filled by a minfind over the denominations at parameter
// D*eps_inv; the chosen-coin array makes the solution reconstructible.
inline coinchange_result coinchange(const coin_system& cs, epsilon_budget budget, meter& m,
                                    rng_stream& rng, const search_params& params = {}) {
  validate(cs);
  const std::int64_t d_max = cs.target;
  const std::size_t coins = cs.coins.size();

  std::vector<double> table(d_max + 1, kInf);
  table[0] = 0.0;
  coinchange_result res;
  res.first_coin.assign(d_max + 1, -1);
  if (d_max > 0) {
    const epsilon_budget sub = budget.scaled(static_cast<double>(d_max));
    for (std::int64_t d = 1; d <= d_max; ++d) {
      const auto extend = make_oracle(coins, [&](index_t i) {
        const std::int64_t rest = d - cs.coins[i];
        if (rest < 0) return kInf;
        return 1.0 + table[rest];
      });
      const minfind_result best = minfind(extend, sub, m, rng, params);
      if (best.value < kInf) {
        table[d] = best.value;
        res.first_coin[d] = static_cast<std::int32_t>(best.arg);
      }
    }
  }
  res.count = table[d_max];
  return res;
}

// Prefix-sum table with inclusion-exclusion reads; indices below zero read
// as zero, so any rectangle sum is one O(1) expression.
class sum_table {
 public:
  explicit sum_table(const std::vector<std::vector<double>>& a) : n_(a.size()), t_(n_ * n_, 0.0) {
    for (std::size_t i = 0; i < n_; ++i) {
      if (a[i].size() != n_) throw std::invalid_argument("sum_table: matrix must be square");
      for (std::size_t j = 0; j < n_; ++j)
        t_[i * n_ + j] = a[i][j] + at(static_cast<std::int64_t>(i) - 1, j) +
                         at(i, static_cast<std::int64_t>(j) - 1) -
                         at(static_cast<std::int64_t>(i) - 1, static_cast<std::int64_t>(j) - 1);
    }
  }

  std::size_t extent() const { return n_; }

  double at(std::int64_t i, std::int64_t j) const {
    if (i < 0 || j < 0) return 0.0;
    return t_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)];
  }

  double rect_sum(std::int64_t miny, std::int64_t minx, std::int64_t maxy, std::int64_t maxx) const {
    return at(maxy, maxx) - at(maxy, minx - 1) - at(miny - 1, maxx) + at(miny - 1, minx - 1);
  }

 private:
  std::size_t n_;
  std::vector<double> t_;
};

struct rect {
  std::int64_t miny = 0, minx = 0, maxy = 0, maxx = 0;
};

struct subarray_result {
  rect r;
  double sum = 0.0;
};

// Maximum-sum rectangular subarray.  Rectangles are addressed by the
// mixed-radix code ((miny*N + minx)*N + maxy)*N + maxx; inverted codes are
// non-solutions.  One outer maximum search at parameter eps_inv.
inline subarray_result subarray_sum(const std::vector<std::vector<double>>& a, epsilon_budget budget,
                                    meter& m, rng_stream& rng, const search_params& params = {}) {
  const index_t n = a.size();
  if (n == 0) throw std::invalid_argument("subarray_sum: empty matrix");
  const sum_table table(a);

  const auto decode = [n](index_t code) {
    rect r;
    r.maxx = static_cast<std::int64_t>(code % n);
    code /= n;
    r.maxy = static_cast<std::int64_t>(code % n);
    code /= n;
    r.minx = static_cast<std::int64_t>(code % n);
    code /= n;
    r.miny = static_cast<std::int64_t>(code);
    return r;
  };

  const auto negated = make_oracle(n * n * n * n, [&table, decode](index_t code) {
    const rect r = decode(code);
    if (r.miny > r.maxy || r.minx > r.maxx) return kInf;
    return -table.rect_sum(r.miny, r.minx, r.maxy, r.maxx);
  });
  const minfind_result best = minfind(negated, budget, m, rng, params);

  subarray_result res;
  res.r = best.value < kInf ? decode(best.arg) : rect{};  // a failed search can end on an invalid code
  res.sum = table.rect_sum(res.r.miny, res.r.minx, res.r.maxy, res.r.maxx);
  return res;
}

// Matrix file: `N` then N rows of N numbers.
inline std::vector<std::vector<double>> parse_matrix(std::istream& in) {
  std::size_t line_no = 1;
  std::size_t n = 0;
  if (!(in >> n)) throw parse_error(line_no, "expected matrix size N");
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    ++line_no;
    for (std::size_t j = 0; j < n; ++j)
      if (!(in >> a[i][j])) throw parse_error(line_no, "expected " + std::to_string(n) + " numbers");
  }
  return a;
}

// Integer list file: `N` then N integers.
inline std::vector<std::int64_t> parse_int_list(std::istream& in) {
  std::size_t line_no = 1;
  std::size_t n = 0;
  if (!(in >> n)) throw parse_error(line_no, "expected list size N");
  std::vector<std::int64_t> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    ++line_no;
    if (!(in >> values[i])) throw parse_error(line_no, "expected " + std::to_string(n) + " integers");
  }
  return values;
}

}  // namespace groversim

#endif
