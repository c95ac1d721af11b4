#pragma once

#include <map>

#include "delone/geometry/delaunay.hpp"

namespace delone {

/// Sphere moment m_k(n) = E[<x, e>^k] over the unit sphere in R^n.
Rational sphere_moment(std::size_t k, std::size_t n);

/// Histogram of the pair inner products <x - c, y - c> over ordered vertex pairs,
/// in the integer scale (den^2 * gd) where den = denominator of c and G = Gi / gd.
struct PairHistogram {
  std::map<Integer, Integer> counts;
  Integer scale;    // true inner product = value / scale
  Integer norm;     // scaled squared radius
  std::size_t dim;  // dimension of the sphere's span
  std::size_t size;
};
PairHistogram pair_histogram(const DelaunayCell& cell, const RatMatrix& gram, unsigned threads = 1);

/// Largest t <= t_max with sum_{x,y} <x-c,y-c>^k = N^2 r^{2k} m_k(n) for k = 1..t.
std::size_t design_strength(const DelaunayCell& cell, const RatMatrix& gram, std::size_t t_max, unsigned threads = 1);
std::size_t design_strength(const PairHistogram& h, std::size_t t_max);

}  // namespace delone
