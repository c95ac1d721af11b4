#pragma once

#include <optional>
#include <vector>

#include "delone/exact/matrix.hpp"

namespace delone {

struct HermiteForm {
  IntMatrix h;  // row Hermite normal form, zero rows last
  IntMatrix u;  // unimodular, h = u * m
  std::size_t rank = 0;
};

/// Row Hermite normal form: positive pivots, entries above a pivot reduced into [0, pivot).
HermiteForm hnf(const IntMatrix& m);

struct SmithForm {
  IntMatrix u;              // unimodular
  IntMatrix v;              // unimodular
  IntMatrix s;              // u * m * v, diagonal with d1 | d2 | ...
  std::vector<Integer> diagonal;  // nonzero diagonal entries
};

SmithForm smith(const IntMatrix& m);
/// Nonzero diagonal of the Smith form.
std::vector<Integer> elementary_divisors(const IntMatrix& m);

struct KernelBasis {
  IntMatrix basis;        // rows span ker(M) ∩ Z^cols, primitive
  IntMatrix coordinates;  // cols x dim: for x in the kernel, x = (x * coordinates) * basis
};

/// Saturated integer basis of the right kernel of M.
KernelBasis kernel_rational(const RatMatrix& m);

/// Basis (HNF rows) of the lattice generated by the integer rows of `generators`.
IntMatrix lattice_basis(const IntMatrix& generators);

/// Incrementally maintained echelon basis of the lattice spanned by inserted vectors.
class LatticeAccumulator {
 public:
  explicit LatticeAccumulator(std::size_t dim) : dim_(dim) {}
  void insert(IntVec v);
  std::size_t rank() const { return rows_.size(); }
  /// HNF of the accumulated lattice.
  IntMatrix basis() const;
  /// True once the accumulated lattice is all of Z^dim.
  bool is_unimodular_full() const;

 private:
  std::size_t dim_;
  std::vector<std::size_t> pivots_;
  std::vector<IntVec> rows_;
};

/// Solves y * basis = x for y when `basis` has independent rows; nullopt if x is
/// outside the rational span or y is not integral.
class RowSolver {
 public:
  explicit RowSolver(const RatMatrix& basis);
  std::optional<RatVec> solve(const RatVec& x) const;
  std::optional<IntVec> solve_integral(const RatVec& x) const;

 private:
  RatMatrix basis_;
  RatMatrix pseudo_;  // basis^T (basis basis^T)^-1
};

}  // namespace delone
