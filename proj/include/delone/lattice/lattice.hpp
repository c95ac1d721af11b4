#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "delone/exact/matrix.hpp"

namespace delone {

/// A full-rank lattice in its rational span: k basis rows in Q^m together with a
/// positive definite ambient form A (identity unless given), Gram = B A B^T.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(RatMatrix basis);
  Lattice(RatMatrix basis, RatMatrix form);
  /// basis = identity, ambient form = gram
  static Lattice from_gram(const RatMatrix& gram);

  std::size_t rank() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  const RatMatrix& basis() const { return basis_; }
  const RatMatrix& form() const { return form_; }
  const RatMatrix& gram() const { return gram_; }
  bool has_standard_form() const { return standard_form_; }

  Rational inner(const RatVec& x, const RatVec& y) const;  // ambient vectors
  Rational norm(const RatVec& x) const { return inner(x, x); }
  /// Norm of the lattice vector with integer coordinates c.
  Rational coord_norm(const IntVec& c) const;
  RatVec point(const RatVec& coords) const { return row_times(coords, basis_); }
  RatVec point(const IntVec& coords) const { return row_times(to_rational(coords), basis_); }
  /// Coordinates of an ambient vector of the rational span; nullopt outside the span.
  std::optional<RatVec> coordinates(const RatVec& x) const;
  bool contains(const RatVec& x) const;

  Rational squared_determinant() const { return determinant(gram_); }
  bool is_integral() const { return delone::is_integral(gram_); }
  bool is_even() const;

 private:
  RatMatrix basis_;
  RatMatrix form_;
  RatMatrix gram_;
  bool standard_form_ = true;
};

struct Determinant {
  Rational value;
  bool squared = false;  // value is det(gram) because sqrt(det gram) is irrational
};

/// P with coordinates(x) = x P for every x in the span (P = A B^T G^-1).
RatMatrix coordinate_map(const Lattice& l);

Determinant determinant(const Lattice& l);
Lattice dual(const Lattice& l);
/// Same lattice with basis rows replaced by rows of T * basis (T integer, |det T| = 1).
Lattice change_basis(const Lattice& l, const IntMatrix& t);
/// Lattice spanned by rational coordinate rows (relative to l's basis); rows may be dependent.
Lattice sublattice_from_coords(const Lattice& l, const RatMatrix& coords);

struct Section {
  Lattice lattice;
  IntMatrix embedding;    // section coords -> coords in the parent (rows = section basis)
  IntMatrix coordinates;  // parent coords of a section vector -> section coords
};

/// {x in L : <x, v> = 0} for a primitive lattice vector v given by coordinates.
Section orthogonal_section_with_maps(const Lattice& l, const IntVec& v);
Lattice orthogonal_section(const Lattice& l, const IntVec& v);
/// Orthogonal projection of L onto the complement of v.
Lattice project_orthogonal(const Lattice& l, const IntVec& v);

/// Elementary divisors (> 1) of L*/L for an integral lattice.
std::vector<Integer> discriminant_group(const Lattice& l);
/// Coordinates of a generator of a cyclic L*/L.
RatVec discriminant_generator(const Lattice& l, Integer* order);
/// The intermediate lattice L ⊆ glue ⊆ L* of index d over L (cyclic L*/L only).
Lattice glue_lattice(const Lattice& l, const Integer& d);

// Lattice text format: "lattice <rank> <ambient_dim>", rank rows of rationals,
// then optional "# form" (ambient form, m rows) and "# gram" (k rows) blocks.
Lattice read_lattice(std::istream& in);
Lattice read_lattice_file(const std::string& path);
void write_lattice(std::ostream& out, const Lattice& l);

}  // namespace delone
