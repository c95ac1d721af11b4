#pragma once

#include "delone/exact/matrix.hpp"

namespace delone {

struct LllResult {
  RatMatrix gram;       // T^T G T
  IntMatrix transform;  // unimodular; column j holds new basis vector j in old coordinates
};

/// LLL reduction of a positive definite Gram matrix (size reduction plus the
/// Lovász condition with parameter delta). Throws PreconditionError when G is
/// not positive definite.
LllResult lll_reduce(const RatMatrix& gram, const Rational& delta = Rational(3, 4));

}  // namespace delone
