#pragma once

#include "delone/exact/matrix.hpp"

namespace delone {

struct Facet {
  std::vector<std::size_t> vertices;  // indices of the vertices on the facet
  IntVec normal;                      // primitive; normal . v == offset on the facet, < offset elsewhere
  Integer offset;
};

/// Facets of the convex hull of a full-dimensional point set in Z^n (double
/// description method in exact integer arithmetic).
std::vector<Facet> facets(const PointSet& vertices);

}  // namespace delone
