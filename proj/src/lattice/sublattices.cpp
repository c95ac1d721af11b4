#include "delone/lattice/sublattices.hpp"

#include "delone/exact/normal_form.hpp"

namespace delone {

SublatticePair make_pair(const Lattice& sub, const Lattice& super) {
  if (sub.rank() != super.rank() || sub.ambient_dim() != super.ambient_dim())
    throw PreconditionError("lattices have different ranks");
  IntMatrix t(sub.rank(), sub.rank());
  for (std::size_t i = 0; i < sub.rank(); ++i) {
    auto c = super.coordinates(sub.basis().row_vec(i));
    if (!c) throw PreconditionError("sublattice is not contained in the superlattice");
    for (std::size_t j = 0; j < c->size(); ++j) {
      if ((*c)[j].get_den() != 1) throw PreconditionError("sublattice is not contained in the superlattice");
      t(i, j) = (*c)[j].get_num();
    }
  }
  Integer index = abs(determinant(t));
  return {sub, super, index, std::move(t)};
}

QuotientStructure quotient_structure(const SublatticePair& pair) {
  QuotientStructure q;
  for (const auto& d : elementary_divisors(pair.transform))
    if (d > 1) q.invariant_factors.push_back(d);
  return q;
}

Index2Walker::Index2Walker(std::size_t rank) : n_(rank), f_(rank, 0) {
  if (rank == 0) throw PreconditionError("index-2 enumeration needs rank >= 1");
  if (rank > 62) throw PreconditionError("rank too large for index-2 enumeration");
}

bool Index2Walker::next() {
  // binary increment with f_1 as the most significant bit
  for (std::size_t i = n_; i-- > 0;) {
    if (f_[i] == 0) {
      f_[i] = 1;
      started_ = true;
      return true;
    }
    f_[i] = 0;
  }
  std::fill(f_.begin(), f_.end(), 1);  // stay at the last element once exhausted
  return false;
}

std::uint64_t Index2Walker::count() const { return (std::uint64_t{1} << n_) - 1; }

IntMatrix Index2Walker::sub_transform() const {
  // pivot: last coordinate with f = 1
  std::size_t p = n_;
  for (std::size_t i = 0; i < n_; ++i)
    if (f_[i]) p = i;
  if (p == n_) throw PreconditionError("walker has no current functional");
  IntMatrix t(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    t(i, i) = 1;
    if (i == p) t(i, i) = 2;
    else if (f_[i]) t(i, p) = 1;
  }
  return t;
}

RatMatrix Index2Walker::super_transform() const {
  std::size_t p = n_;
  for (std::size_t i = n_; i-- > 0;)
    if (f_[i]) p = i;
  if (p == n_) throw PreconditionError("walker has no current functional");
  RatMatrix t = RatMatrix::identity(n_);
  for (std::size_t j = 0; j < n_; ++j) t(p, j) = f_[j] ? Rational(1, 2) : Rational(0);
  return t;
}

Lattice Index2Sublattices::current() const { return Lattice(to_rational(walk_.sub_transform()) * l_.basis(), l_.form()); }

Lattice Index2Superlattices::current() const { return Lattice(walk_.super_transform() * l_.basis(), l_.form()); }

}  // namespace delone
