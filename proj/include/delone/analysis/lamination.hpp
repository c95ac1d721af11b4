#pragma once

#include <optional>

#include "delone/geometry/delaunay.hpp"

namespace delone {

/// Partition of the vertices into the two layers a.v = k and a.v = k + 1.
struct LaminationPartition {
  IntVec functional;  // primitive integer functional on lattice coordinates
  Integer offset;     // k
  std::vector<std::size_t> layer0, layer1;
};

/// Saturated basis of the kernel of a functional (the lattice L').
IntMatrix lamination_sublattice(const IntVec& functional);

/// All 2-laminations, by the subsets of an affinely independent (n+1)-subset S
/// containing the first point of S. Requires a full-dimensional vertex set.
std::vector<LaminationPartition> two_laminations(const PointSet& vertices);
/// Same set via one closest-vector query: a defines a 2-lamination iff
/// sum_v (a.(v - s0) - 1/2)^2 = N/4, the minimum of this quadratic over Z^n.
/// By default a long double enumeration proposes candidates that are then
/// checked exactly, with the all-rational search as fallback; `exact` forces
/// the rational search.
std::vector<LaminationPartition> two_laminations_cvp(const PointSet& vertices, bool exact = false);

struct WidthUpperBound {
  std::size_t laminae = 0;  // minimum lamina count found
  IntVec witness;
  std::size_t lower = 1;    // certified lower bound
  bool exact = false;
};

/// Minimum lamina count over primitive functionals a with a G^-1 a^T <= bound.
WidthUpperBound lamination_number_upper(const DelaunayCell& cell, const RatMatrix& gram, const Rational& bound,
                                        unsigned threads = 1);

struct WidthProof {
  bool success = false;
  std::uint64_t sublattices = 0;   // index-2 sublattices examined
  std::uint64_t laminations = 0;   // 2-laminations checked against the other class
  std::vector<std::uint8_t> witness_parity;  // failing sublattice
  // sublattice coordinates for a 2-lamination failure; lattice coordinates
  // for a functional constant on a class; empty for a dimension failure
  IntVec witness_lamination;
  std::string reason;
};

/// Index-2 schema certifying lamination number >= 5. For every index-2
/// sublattice, every 2-lamination of one parity class must cut the other
/// class into at least 3 laminae. A class lying in a hyperplane is also
/// allowed if the functional constant on it, when it has the sublattice's
/// parity, gives the cell at least 5 laminae. Classes of codimension above
/// one fail.
/// Sublattices are split across threads; the reported failure is always the
/// first in walk order. progress receives the number done, about every 1024.
WidthProof width_lower_bound_index2(const DelaunayCell& cell, const std::function<void(std::uint64_t)>& progress = {},
                                    unsigned threads = 1);

}  // namespace delone
