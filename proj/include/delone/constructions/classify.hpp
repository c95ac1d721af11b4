#pragma once

#include <optional>
#include <string>

#include "delone/lattice/lattice.hpp"

namespace delone {

struct LeechVectorType {
  unsigned n = 0;  // half-norm
  std::optional<std::pair<unsigned, unsigned>> decomposition;  // (a, b), a >= b
  IntVec u1, u2;   // witnesses: u1 + u2 = v, norms 2a and 2b
  std::string label() const;  // "3", "6_{2,2}", ...
};

/// Type of a Leech vector of norm <= 22. For the norms 12, 16, 18, 20 and 22 a
/// decomposition v = u1 + u2 is attached: the least a + b, then the least b.
LeechVectorType classify_leech_vector(const Lattice& leech, const IntVec& v);

}  // namespace delone
