#pragma once

#include <cstdint>
#include <vector>

#include "delone/lattice/lattice.hpp"

namespace delone {

struct SublatticePair {
  Lattice sub;
  Lattice super;
  Integer index;
  IntMatrix transform;  // sub basis = transform * super basis
};

/// Checks sub ⊆ super and computes the transform and index.
SublatticePair make_pair(const Lattice& sub, const Lattice& super);

struct QuotientStructure {
  std::vector<Integer> invariant_factors;  // d1 | d2 | ..., all > 1
};

QuotientStructure quotient_structure(const SublatticePair& pair);

/// Lazy walk over nonzero f in F_2^n in lexicographic order (f_1 most significant).
/// Each step describes the index-2 sublattice {w : f(w) even} and the index-2
/// superlattice L + Z (f/2).
class Index2Walker {
 public:
  explicit Index2Walker(std::size_t rank);
  bool next();  // advance; false when exhausted
  const std::vector<std::uint8_t>& functional() const { return f_; }
  std::uint64_t count() const;  // 2^n - 1
  /// Rows of the sublattice basis in coordinates of L (integer, det 2).
  IntMatrix sub_transform() const;
  /// Rows of the superlattice basis in coordinates of L (det 1/2).
  RatMatrix super_transform() const;

 private:
  std::size_t n_;
  std::vector<std::uint8_t> f_;
  bool started_ = false;
};

class Index2Sublattices {
 public:
  explicit Index2Sublattices(Lattice l) : l_(std::move(l)), walk_(l_.rank()) {}
  bool next() { return walk_.next(); }
  Lattice current() const;
  const std::vector<std::uint8_t>& functional() const { return walk_.functional(); }

 private:
  Lattice l_;
  Index2Walker walk_;
};

class Index2Superlattices {
 public:
  explicit Index2Superlattices(Lattice l) : l_(std::move(l)), walk_(l_.rank()) {}
  bool next() { return walk_.next(); }
  Lattice current() const;
  const std::vector<std::uint8_t>& functional() const { return walk_.functional(); }

 private:
  Lattice l_;
  Index2Walker walk_;
};

}  // namespace delone
