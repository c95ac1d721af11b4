#pragma once

#include <iosfwd>
#include <string>

#include "delone/geometry/enumerate.hpp"

namespace delone {

struct EmptySphere {
  RatVec center;  // lattice coordinates
  Rational radius_sq;
};

struct DelaunayCell {
  RatVec center;  // circumcenter, lattice coordinates
  Rational radius_sq;
  PointSet vertices;  // lattice coordinates, sorted
  std::size_t affine_dim = 0;
  bool full_dimensional = false;
};

/// Affine dimension of a point set together with the indices of an affinely
/// independent subset realizing it (first point included).
struct AffineFrame {
  std::size_t dim = 0;
  std::vector<std::size_t> basis;  // affine_dim + 1 indices
};
AffineFrame affine_frame(const PointSet& points);

/// Center in the affine span of the points equidistant from all of them.
/// Throws PreconditionError when the points are not co-spherical.
EmptySphere circumsphere(const PointSet& points, const RatMatrix& gram);

/// Delaunay cell of the closest lattice points to x (lattice coordinates).
DelaunayCell delaunay_cell(const Enumerator& en, const RatVec& x, unsigned threads = 1);
/// Builds a cell from a known vertex set (circumsphere plus emptiness check).
DelaunayCell cell_from_vertices(const Enumerator& en, PointSet vertices, unsigned threads = 1);

struct EmptinessCertificate {
  bool empty = false;
  PointSet boundary;  // points at distance exactly r
  PointSet interior;  // points strictly inside
};
EmptinessCertificate verify_empty_sphere(const Enumerator& en, const RatVec& center, const Rational& radius_sq,
                                         unsigned threads = 1);

/// Lexicographically least translate of the vertex list (translation class key).
PointSet canonical_translate(const PointSet& vertices, IntVec* shift = nullptr);
DelaunayCell translate(const DelaunayCell& cell, const IntVec& shift);

/// Common denominator of the circumcenter (smallest d with d c integral).
Integer center_denominator(const DelaunayCell& cell);

// Polytope text format.
void write_polytope(std::ostream& out, const DelaunayCell& cell, const std::string& lattice_file);
/// Returns the cell and the lattice file path stored on line 0 ("" if absent).
DelaunayCell read_polytope(std::istream& in, std::string* lattice_file);

}  // namespace delone
