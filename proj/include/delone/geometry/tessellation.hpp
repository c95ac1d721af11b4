#pragma once

#include "delone/geometry/delaunay.hpp"
#include "delone/geometry/polytope.hpp"

namespace delone {

struct TessellationOptions {
  std::size_t max_rank = 8;  // rank guard
  bool allow_large = false;  // ignore the guard
  unsigned threads = 1;
  std::uint64_t seed = 1;    // start point
};

/// Full-dimensional cell reached from a pseudo-random start point by growing the
/// set of co-spherical closest points until it spans.
DelaunayCell start_cell(const Enumerator& en, std::uint64_t seed = 1, unsigned threads = 1);

/// The cell across `facet` (center pivoted along the facet normal).
DelaunayCell adjacent_cell(const Enumerator& en, const DelaunayCell& cell, const Facet& facet, unsigned threads = 1);

/// Translation classes of full-dimensional Delaunay cells (canonical representatives).
std::vector<DelaunayCell> tessellate(const Enumerator& en, const TessellationOptions& opts = {});
Rational covering_radius_sq(const Enumerator& en, const TessellationOptions& opts = {});

}  // namespace delone
