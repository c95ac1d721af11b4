#pragma once

#include "delone/geometry/delaunay.hpp"
#include "delone/lattice/sublattices.hpp"

namespace delone {

/// Least d > 0 with d c integral (c in lattice coordinates).
Integer tden(const RatVec& c);

enum class SymmetryKind { centrally_symmetric, antisymmetric };
const char* to_string(SymmetryKind k);

/// Checks v -> 2c - v on the vertex set; mixed cases raise IntegrityError, as
/// does a disagreement with the tden = 2 criterion.
SymmetryKind symmetry_kind(const DelaunayCell& cell);

/// Lattice generated by the vertex differences, in coordinates of the cell's lattice.
struct AffineLattice {
  IntMatrix generators;  // HNF rows
  std::size_t rank = 0;
  Integer index;         // index in its saturation (the full lattice for full-dimensional cells)
};
AffineLattice affine_lattice(const DelaunayCell& cell);
/// Full-dimensional cells: L(D) as a sublattice pair of `l`.
SublatticePair affine_lattice_pair(const DelaunayCell& cell, const Lattice& l);

}  // namespace delone
