#include "delone/analysis/structure.hpp"

#include "delone/exact/normal_form.hpp"

namespace delone {

Integer tden(const RatVec& c) { return lcm_denominators(c); }

const char* to_string(SymmetryKind k) {
  return k == SymmetryKind::centrally_symmetric ? "centrally-symmetric" : "antisymmetric";
}

SymmetryKind symmetry_kind(const DelaunayCell& cell) {
  const std::size_t n = cell.vertices.dim();
  // 2c - v is a lattice point only when 2c is integral
  bool two_c_integral = true;
  std::vector<Integer> twoc(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational t = 2 * cell.center[i];
    if (t.get_den() != 1) two_c_integral = false;
    else twoc[i] = t.get_num();
  }
  std::size_t paired = 0;
  if (two_c_integral) {
    std::vector<std::int32_t> image(n);
    for (std::size_t v = 0; v < cell.vertices.size(); ++v) {
      for (std::size_t i = 0; i < n; ++i) image[i] = checked_int32(twoc[i] - static_cast<long>(cell.vertices[v][i]));
      if (cell.vertices.contains(image)) ++paired;
    }
  }
  if (paired != 0 && paired != cell.vertices.size())
    throw IntegrityError("vertex set is neither centrally symmetric nor antisymmetric");
  const bool symmetric = paired != 0;
  if (symmetric != (tden(cell.center) == 2))
    throw IntegrityError("central symmetry disagrees with the center denominator");
  return symmetric ? SymmetryKind::centrally_symmetric : SymmetryKind::antisymmetric;
}

AffineLattice affine_lattice(const DelaunayCell& cell) {
  const std::size_t n = cell.vertices.dim();
  LatticeAccumulator acc(n);
  for (std::size_t v = 1; v < cell.vertices.size(); ++v) {
    IntVec d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<long>(cell.vertices[v][i]) - cell.vertices[0][i];
    acc.insert(std::move(d));
  }
  AffineLattice out;
  out.generators = acc.basis();
  out.rank = out.generators.rows();
  out.index = 1;
  for (const auto& e : elementary_divisors(out.generators)) out.index *= e;
  return out;
}

SublatticePair affine_lattice_pair(const DelaunayCell& cell, const Lattice& l) {
  AffineLattice al = affine_lattice(cell);
  if (al.rank != l.rank()) throw PreconditionError("affine lattice of a lower-dimensional cell");
  RatMatrix basis = to_rational(al.generators) * l.basis();
  Lattice sub = l.has_standard_form() ? Lattice(basis) : Lattice(basis, l.form());
  SublatticePair p = make_pair(sub, l);
  if (p.index != al.index) throw IntegrityError("affine lattice index mismatch");
  return p;
}

}  // namespace delone
