#pragma once

#include <optional>

#include "delone/geometry/delaunay.hpp"

namespace delone {

struct LayerRadius {
  long i = 0;
  Rational r_sq;  // squared distance from (1 - 2i) c to the lattice
};

/// r_i for i = 0 .. last (negative i mirror i -> 1 - i).
std::vector<LayerRadius> radii_sequence(const Enumerator& en, const DelaunayCell& cell, long last, unsigned threads = 1);

enum class LaminateKind { first_type, second_type };
const char* to_string(LaminateKind k);

struct LaminateResult {
  LaminateKind kind = LaminateKind::first_type;
  std::vector<LayerRadius> radii;
  Rational delta_s;           // 0 for the first type
  bool unchanged = false;     // first type with tden 2: the input is returned as is
  RatMatrix new_gram;         // Gram of L(delta_s) (rank n + 1), of L(0), or of L
  DelaunayCell new_cell;      // coordinates in new_gram's lattice
  RatMatrix embedding;        // old coordinates -> new coordinates (rows: old basis in the new one)
  std::vector<long> layers;   // layers i contributing vertices (second type)
  std::optional<std::size_t> perfection_before, perfection_after;
};

/// Extension to a centrally symmetric cell: second type lifts to
/// L + Z e (one dimension up), first type with tden 4 passes to L + Z 2c.
LaminateResult laminate_extend(const Enumerator& en, const DelaunayCell& cell, bool with_perfection = true,
                               unsigned threads = 1);

}  // namespace delone
