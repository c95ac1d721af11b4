#pragma once

#include <string>

#include "delone/lattice/lattice.hpp"

namespace delone {

/// Root lattices and Z^n given by Gram matrices (Cartan matrices for the root lattices).
Lattice lattice_zn(std::size_t n);
Lattice lattice_an(std::size_t n);
Lattice lattice_dn(std::size_t n);
Lattice lattice_e(std::size_t n);  // n in {6, 7, 8}

}  // namespace delone
