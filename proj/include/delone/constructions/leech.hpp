#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "delone/lattice/lattice.hpp"

namespace delone {

/// The Leech lattice in coordinates scaled by sqrt(8): integer basis rows with
/// ambient form diag(1/8), so norms are the usual ones (minimum 4). Checks
/// integrality, evenness and determinant 1 on construction.
Lattice build_leech();

/// Lattice coordinates of an integer ambient vector (sqrt(8) scale); throws
/// PreconditionError if it is not in the lattice.
IntVec leech_vector(const Lattice& leech, const std::vector<int>& scaled);

/// Fixed representatives used throughout: (4,4,0^22), (5,1^23), (5,5,-3,1^21).
IntVec leech_v2(const Lattice& leech);
IntVec leech_v3(const Lattice& leech);
IntVec leech_v5(const Lattice& leech);

/// Minimal vectors with lattice coordinates and ambient integer coordinates.
struct MinimalVectors {
  std::size_t dim = 0;
  std::vector<std::int32_t> coords;   // count x dim
  std::vector<std::int32_t> ambient;  // count x ambient_dim
  std::size_t ambient_dim = 0;
  std::size_t count() const { return dim == 0 ? 0 : coords.size() / dim; }
};

/// 64-bit FNV-1a hash of the lattice text (basis and form), the cache key.
std::uint64_t lattice_hash(const Lattice& l);

/// Min of an integer-ambient lattice. With DELONE_CACHE_DIR set, the list is
/// read from / written to <dir>/min-<hash>.bin (little-endian int32 records
/// after a header carrying the hash and sizes). Throws IntegrityError when the
/// count or norm check `expect_count` fails (0 skips the count check).
MinimalVectors minimal_vectors(const Lattice& l, std::size_t expect_count = 0, unsigned threads = 1);

/// Inner products (times the ambient form denominator `scale`) of every minimal vector with v.
std::vector<std::int64_t> inner_products_scaled(const MinimalVectors& m, const std::vector<std::int32_t>& v_ambient);

}  // namespace delone
