#ifndef GROVERSIM_GEOMETRY_HPP
#define GROVERSIM_GEOMETRY_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>
#include <vector>

#include "groversim/core.hpp"
#include "groversim/tools.hpp"

// Maximum points on a line: hash-canonicalised integer directions for Z^n,
// angular sweep for R^2, both wrapped in an outer maximum search.

namespace groversim {

struct point_set_zn {
  std::size_t dim = 0;
  std::vector<std::vector<std::int64_t>> points;
};

struct point_set_r2 {
  std::vector<std::array<double, 2>> points;
};

// Canonical integer direction: divide by the gcd of the absolute components
// and make the first nonzero component positive.  Idempotent; all vectors
// parallel to each other share one canonical form.
inline std::vector<std::int64_t> canonicalize(std::vector<std::int64_t> v) {
  std::int64_t g = 0;
  for (std::int64_t c : v) g = std::gcd(g, c < 0 ? -c : c);
  if (g == 0) throw std::invalid_argument("canonicalize: zero vector");
  for (std::int64_t& c : v) c /= g;
  for (std::int64_t c : v) {
    if (c != 0) {
      if (c < 0)
        for (std::int64_t& x : v) x = -x;
      break;
    }
  }
  return v;
}

// Count of *other* points on the most populated line through points[p];
// optionally reports that line's canonical direction.  Ties resolve to the
// lexicographically smallest direction.
inline index_t mup(const point_set_zn& ps, index_t p, std::vector<std::int64_t>* direction = nullptr) {
  std::map<std::vector<std::int64_t>, index_t> buckets;
  for (index_t i = 0; i < ps.points.size(); ++i) {
    if (i == p) continue;
    std::vector<std::int64_t> diff(ps.dim);
    for (std::size_t c = 0; c < ps.dim; ++c) diff[c] = ps.points[i][c] - ps.points[p][c];
    ++buckets[canonicalize(std::move(diff))];
  }
  index_t best = 0;
  for (const auto& [dir, count] : buckets) {
    if (count > best) {
      best = count;
      if (direction) *direction = dir;
    }
  }
  return best;
}

struct line_zn {
  std::vector<std::int64_t> base;
  std::vector<std::int64_t> direction;
};

struct maxpoints_zn_result {
  line_zn line;
  index_t count = 0;  // points on the line, including the base point
};

// Best line over a Z^n point set: an outer maximum search (minfind on the
// negated per-point count) at parameter eps_inv, then one classical rerun at
// the winner to extract the direction.
inline maxpoints_zn_result maxpoints_zn(const point_set_zn& ps, epsilon_budget budget, meter& m,
                                        rng_stream& rng, const search_params& params = {}) {
  const index_t n = ps.points.size();
  if (n < 2) throw std::invalid_argument("maxpoints_zn: need at least two points");
  const auto negated = make_oracle(n, [&ps](index_t p) { return -static_cast<double>(mup(ps, p)); });
  const minfind_result best = minfind(negated, budget, m, rng, params);

  maxpoints_zn_result res;
  res.line.base = ps.points[best.arg];
  res.count = mup(ps, best.arg, &res.line.direction) + 1;
  return res;
}

namespace detail {

inline double cross2(const std::array<double, 2>& a, const std::array<double, 2>& b) {
  return a[0] * b[1] - a[1] * b[0];
}

}  // namespace detail

// Count of other points on the best line through points[p], by sorting the
// difference vectors counter-clockwise after reflecting them into the right
// half-plane, then scanning for the longest circular run whose cross product
// against the run anchor stays within delta.  Optionally reports one other
// point of that run.
inline index_t mup2(const point_set_r2& ps, index_t p, double delta, index_t* witness = nullptr) {
  const index_t n = ps.points.size();
  std::vector<std::pair<std::array<double, 2>, index_t>> dirs;
  dirs.reserve(n - 1);
  for (index_t i = 0; i < n; ++i) {
    if (i == p) continue;
    std::array<double, 2> a{ps.points[i][0] - ps.points[p][0], ps.points[i][1] - ps.points[p][1]};
    if (a[0] < 0.0 || (a[0] == 0.0 && a[1] < 0.0)) {
      a[0] = -a[0];
      a[1] = -a[1];
    }
    dirs.push_back({a, i});
  }
  std::sort(dirs.begin(), dirs.end(),
            [](const auto& x, const auto& y) { return detail::cross2(x.first, y.first) > 0.0; });

  const index_t count = dirs.size();
  index_t best = 0;
  // Two passes over the sorted array so runs may wrap past the near-vertical
  // seam; run length is capped at the number of vectors.
  index_t run_start = 0;
  index_t run_len = 0;
  for (index_t step = 0; step < 2 * count; ++step) {
    const index_t i = step % count;
    if (run_len > 0 &&
        std::abs(detail::cross2(dirs[run_start % count].first, dirs[i].first)) <= delta) {
      ++run_len;
    } else {
      run_start = step;
      run_len = 1;
    }
    const index_t effective = std::min(run_len, count);
    if (effective > best) {
      best = effective;
      if (witness) *witness = dirs[run_start % count].second;
    }
  }
  return best;
}

struct line_r2 {
  std::array<double, 2> base{};
  std::array<double, 2> direction{};
};

struct maxpoints_r2_result {
  line_r2 line;
  index_t count = 0;
};

// Best line over an R^2 point set, outer search at parameter eps_inv.  With
// delta = 0 and integer-valued coordinates every cross product is exact.
inline maxpoints_r2_result maxpoints_r2(const point_set_r2& ps, epsilon_budget budget, double delta,
                                        meter& m, rng_stream& rng, const search_params& params = {}) {
  const index_t n = ps.points.size();
  if (n < 2) throw std::invalid_argument("maxpoints_r2: need at least two points");
  if (delta < 0.0) throw std::invalid_argument("maxpoints_r2: delta must be nonnegative");
  const auto negated =
      make_oracle(n, [&ps, delta](index_t p) { return -static_cast<double>(mup2(ps, p, delta)); });
  const minfind_result best = minfind(negated, budget, m, rng, params);

  index_t other = 0;
  maxpoints_r2_result res;
  res.count = mup2(ps, best.arg, delta, &other) + 1;
  res.line.base = ps.points[best.arg];
  res.line.direction = {ps.points[other][0] - ps.points[best.arg][0],
                        ps.points[other][1] - ps.points[best.arg][1]};
  return res;
}

// Points file: `n N` then N rows of n coordinates.
inline point_set_zn parse_points_zn(std::istream& in) {
  std::size_t line_no = 1;
  std::size_t dim = 0, count = 0;
  if (!(in >> dim >> count)) throw parse_error(line_no, "expected `n N`");
  point_set_zn ps;
  ps.dim = dim;
  ps.points.assign(count, std::vector<std::int64_t>(dim));
  for (std::size_t i = 0; i < count; ++i) {
    ++line_no;
    for (std::size_t c = 0; c < dim; ++c) {
      if (!(in >> ps.points[i][c])) throw parse_error(line_no, "expected " + std::to_string(dim) + " integers");
    }
  }
  return ps;
}

inline point_set_r2 parse_points_r2(std::istream& in) {
  std::size_t line_no = 1;
  std::size_t dim = 0, count = 0;
  if (!(in >> dim >> count)) throw parse_error(line_no, "expected `n N`");
  if (dim != 2) throw parse_error(line_no, "R^2 mode requires n = 2");
  point_set_r2 ps;
  ps.points.assign(count, {});
  for (std::size_t i = 0; i < count; ++i) {
    ++line_no;
    if (!(in >> ps.points[i][0] >> ps.points[i][1])) throw parse_error(line_no, "expected 2 numbers");
  }
  return ps;
}

}  // namespace groversim

#endif
