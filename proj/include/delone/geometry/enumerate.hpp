#pragma once

#include <functional>
#include <memory>

#include "delone/exact/lll.hpp"
#include "delone/lattice/lattice.hpp"

namespace delone {

/// Points of a ball, in lattice coordinates, with their exact squared distances.
struct BallPoints {
  PointSet points;  // sorted lexicographically
  std::vector<Rational> dist_sq;
};

struct ClosestPoints {
  Rational dist_sq;
  PointSet points;  // sorted lexicographically
};

/// Exact Fincke-Pohst enumeration for one Gram matrix. The Gram is LLL-reduced
/// once; each query scales the LDL data to integers and walks the search tree
/// in int64, __int128 or GMP arithmetic depending on a priori size bounds.
class Enumerator {
 public:
  explicit Enumerator(const RatMatrix& gram);
  explicit Enumerator(const Lattice& l) : Enumerator(l.gram()) {}

  std::size_t rank() const { return gram_.rows(); }
  const RatMatrix& gram() const { return gram_; }
  const LllResult& reduction() const { return lll_; }

  /// All y with (y - x)^T G (y - x) <= bound.
  BallPoints ball(const RatVec& center, const Rational& bound, unsigned threads = 1) const;
  /// Visits the same set without materializing it (single-threaded, unordered).
  void visit(const RatVec& center, const Rational& bound,
             const std::function<void(std::span<const std::int32_t>, const Rational&)>& fn) const;
  ClosestPoints closest(const RatVec& center, unsigned threads = 1) const;

  /// Nonzero vectors of minimal norm.
  ClosestPoints shortest(unsigned threads = 1) const;
  /// Vectors of norm exactly q.
  PointSet of_norm(const Rational& q, unsigned threads = 1) const;

  /// Which arithmetic the last query used: 0 int64, 1 int128, 2 GMP (for tests).
  static int last_arithmetic();

 private:
  RatMatrix gram_;
  LllResult lll_;
  IntMatrix t_;     // reduced coords -> original: y = T y'
  RatMatrix tinv_;  // original -> reduced
  RatMatrix r_;     // unit upper LDL factor of the reduced Gram
  RatVec d_;
  std::vector<double> spread_;  // sqrt((G'^-1)_ii): |y'_i - x'_i| <= spread_i * sqrt(bound)
};

// Convenience wrappers on lattices (ambient vectors are mapped to coordinates).
ClosestPoints shortest_vectors(const Lattice& l, unsigned threads = 1);
PointSet vectors_of_norm(const Lattice& l, const Rational& q, unsigned threads = 1);
/// x is an ambient vector; throws PreconditionError outside the span of L.
ClosestPoints closest_vectors(const Lattice& l, const RatVec& x, unsigned threads = 1);

}  // namespace delone
