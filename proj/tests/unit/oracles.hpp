#pragma once

// Small independent reference computations used as test oracles. Nothing here
// calls into the library beyond the scalar types.

#include <cstdint>
#include <vector>

#include "delone/exact/matrix.hpp"

namespace oracle {

using delone::Integer;
using delone::Rational;

// rank by fraction-free elimination on a row-scaled copy
inline std::size_t ff_rank(std::vector<std::vector<Rational>> m) {
  std::vector<std::vector<Integer>> a;
  for (auto& row : m) {
    Integer d = 1;
    for (auto& q : row) d = lcm(d, q.get_den());
    std::vector<Integer> r;
    for (auto& q : row) r.push_back(Rational(q * d).get_num());
    a.push_back(r);
  }
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0, rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      Integer f = a[i][c], g = a[rank][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = a[i][j] * g - a[rank][j] * f;
    }
    ++rank;
  }
  return rank;
}

inline Integer det2(const delone::IntMatrix& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

// Sphere average of a monomial prod x_i^{e_i} over the unit sphere of the
// quadratic form x^T A x with Gaussian covariance C = A^{-1}:
// E_sphere[x^a] = E_gauss[x^a] / (n (n+2) ... (n + |a| - 2)) for even |a|.
// The Gaussian moment is a sum over perfect matchings (Wick).
inline Rational wick(const std::vector<std::size_t>& idx, const delone::RatMatrix& cov, std::vector<bool>& used) {
  std::size_t first = 0;
  while (first < idx.size() && used[first]) ++first;
  if (first == idx.size()) return 1;
  used[first] = true;
  Rational total = 0;
  for (std::size_t j = first + 1; j < idx.size(); ++j) {
    if (used[j]) continue;
    used[j] = true;
    total += cov(idx[first], idx[j]) * wick(idx, cov, used);
    used[j] = false;
  }
  used[first] = false;
  return total;
}

}  // namespace oracle

namespace oracle {

// All integer points in the box |y_i| <= r around 0 with (y - x)^T G (y - x) minimal.
inline std::pair<Rational, std::vector<std::vector<int>>> box_closest(const delone::RatMatrix& g,
                                                                       const std::vector<Rational>& x, int r) {
  const std::size_t n = x.size();
  std::vector<int> y(n, -r);
  Rational best = -1;
  std::vector<std::vector<int>> pts;
  for (;;) {
    Rational d = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d += (y[i] - x[i]) * g(i, j) * (y[j] - x[j]);
    if (best < 0 || d < best) {
      best = d;
      pts.clear();
    }
    if (d == best) pts.push_back(y);
    std::size_t k = 0;
    while (k < n && y[k] == r) y[k++] = -r;
    if (k == n) break;
    ++y[k];
  }
  return {best, pts};
}

inline std::size_t box_count(const delone::RatMatrix& g, const std::vector<Rational>& x, const Rational& bound, int r) {
  const std::size_t n = x.size();
  std::vector<int> y(n, -r);
  std::size_t count = 0;
  for (;;) {
    Rational d = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d += (y[i] - x[i]) * g(i, j) * (y[j] - x[j]);
    if (d <= bound) ++count;
    std::size_t k = 0;
    while (k < n && y[k] == r) y[k++] = -r;
    if (k == n) break;
    ++y[k];
  }
  return count;
}

}  // namespace oracle
