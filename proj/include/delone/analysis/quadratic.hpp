#pragma once

#include "delone/geometry/delaunay.hpp"

namespace delone {

/// f(x) = x^T Q x + b^T x + c0 on lattice coordinates.
struct QuadraticFunction {
  RatMatrix q;
  RatVec b;
  Rational c0;

  Rational operator()(std::span<const std::int32_t> x) const;
  Rational operator()(const RatVec& x) const;
};

/// f_D(x) = |x - c|^2 - r^2 in the metric of `gram`.
QuadraticFunction build_fD(const DelaunayCell& cell, const RatMatrix& gram);

struct PerfectionReport {
  std::size_t dim_quadratics = 0;  // n(n+3)/2 + 1
  std::size_t constraint_rank = 0;
  std::size_t perfection_rank = 0;
  bool is_perfect = false;
  std::size_t primes = 0;      // primes used by the modular rank
  bool exact_fallback = false;
};

/// Dimension of the space of quadratic functions vanishing on the vertices.
/// Throws PreconditionError for lower-dimensional cells.
PerfectionReport perfection_rank(const DelaunayCell& cell, const RatMatrix& gram);

}  // namespace delone
