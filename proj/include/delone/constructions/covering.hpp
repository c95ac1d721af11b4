#pragma once

#include "delone/geometry/delaunay.hpp"

namespace delone {

/// Squared bound 2 - 1/(4 |v|^2) on the covering radius of the dual of L(v).
Rational covering_bound(const Lattice& leech, const IntVec& v);

struct SmithPointReport {
  Rational dist_sq;
  std::size_t count = 0;
  bool empty = false;           // no lattice point strictly inside
  bool meets_bound = false;     // dist_sq equals the supplied bound
};

/// A point of L(v2)* (ambient sqrt(8) coordinates, v2 = (4,4,0^22)) at squared
/// distance 31/16 from 64 lattice points; found by sampling Delaunay cells.
RatVec lambda23_smith_point();

/// Closest lattice points to c (lattice coordinates of L) with an emptiness check.
SmithPointReport check_smith_point(const Lattice& l, const RatVec& c, const Rational& bound, unsigned threads = 1);

}  // namespace delone
