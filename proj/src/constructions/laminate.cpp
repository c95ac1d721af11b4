#include "delone/constructions/laminate.hpp"

#include <algorithm>
#include <set>

#include "delone/analysis/quadratic.hpp"
#include "delone/analysis/structure.hpp"
#include "delone/exact/normal_form.hpp"

namespace delone {

const char* to_string(LaminateKind k) { return k == LaminateKind::first_type ? "first" : "second"; }

std::vector<LayerRadius> radii_sequence(const Enumerator& en, const DelaunayCell& cell, long last, unsigned threads) {
  std::vector<LayerRadius> out;
  for (long i = 0; i <= last; ++i) {
    RatVec x = cell.center;
    for (auto& q : x) q *= 1 - 2 * i;
    out.push_back({i, i <= 1 ? cell.radius_sq : en.closest(x, threads).dist_sq});
  }
  return out;
}

LaminateResult laminate_extend(const Enumerator& en, const DelaunayCell& cell, bool with_perfection, unsigned threads) {
  const std::size_t n = en.rank();
  if (!cell.full_dimensional || cell.vertices.dim() != n) throw PreconditionError("laminate_extend needs a full-dimensional cell");
  const RatMatrix& g = en.gram();
  const RatVec& c = cell.center;
  const Rational& r0 = cell.radius_sq;
  const Integer t = tden(c);

  LaminateResult res;
  // (1 - 2i) c mod L has period tden in i, so i = 2 .. tden + 1 covers every class;
  // within a class delta_i only shrinks as i grows.
  const long last = static_cast<long>(t.get_si()) + 1;
  res.radii = radii_sequence(en, cell, std::max(last, 2L), threads);
  for (const auto& lr : res.radii) {
    if (lr.i < 2 || lr.r_sq >= r0) continue;
    Rational delta = (r0 - lr.r_sq) / Rational(lr.i * lr.i - lr.i);
    if (res.kind == LaminateKind::first_type || delta > res.delta_s) res.delta_s = delta;
    res.kind = LaminateKind::second_type;
  }

  if (res.kind == LaminateKind::second_type) {
    // e = 2c + h with h orthogonal to L and |h|^2 = delta_s
    RatVec gc = times_col(g, c);
    RatMatrix g2(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g2(i, j) = g(i, j);
    for (std::size_t i = 0; i < n; ++i) g2(i, n) = g2(n, i) = 2 * gc[i];
    g2(n, n) = 4 * dot(c, gc) + res.delta_s;
    RatVec c2(n + 1);
    c2[n] = Rational(1, 2);
    Enumerator en2(g2);
    res.new_gram = g2;
    res.new_cell = delaunay_cell(en2, c2, threads);
    res.embedding = RatMatrix(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) res.embedding(i, i) = 1;
    if (res.new_cell.center != c2 || res.new_cell.radius_sq != r0 + res.delta_s / 4)
      throw IntegrityError("lifted cell is not centered at e/2");
    std::set<long> layers;
    for (std::size_t v = 0; v < res.new_cell.vertices.size(); ++v) layers.insert(res.new_cell.vertices[v][n]);
    res.layers.assign(layers.begin(), layers.end());
    // D and 2c' - D sit in layers 0 and 1
    std::vector<std::int32_t> lift(n + 1);
    for (std::size_t v = 0; v < cell.vertices.size(); ++v) {
      for (std::size_t j = 0; j < n; ++j) lift[j] = cell.vertices[v][j];
      lift[n] = 0;
      bool ok = res.new_cell.vertices.contains(lift);
      for (std::size_t j = 0; j < n; ++j) lift[j] = -cell.vertices[v][j];
      lift[n] = 1;
      if (!ok || !res.new_cell.vertices.contains(lift)) throw IntegrityError("lifted cell misses a layer of D");
    }
  } else if (t == 2) {
    res.unchanged = true;
    res.new_gram = g;
    res.new_cell = cell;
    res.embedding = RatMatrix::identity(n);
  } else {
    // L(0) = L + Z 2c
    Integer den = 1;
    for (const auto& q : c) den = lcm(den, Integer(Rational(2 * q).get_den()));
    IntMatrix gens(n + 1, n);
    for (std::size_t i = 0; i < n; ++i) gens(i, i) = den;
    for (std::size_t j = 0; j < n; ++j) gens(n, j) = Rational(2 * c[j] * den).get_num();
    RatMatrix tb = to_rational(lattice_basis(gens));
    tb *= Rational(1) / Rational(den);
    RatMatrix tinv = inverse(tb);
    res.new_gram = tb * g * tb.transpose();
    res.embedding = tinv;
    Enumerator en2(res.new_gram);
    res.new_cell = delaunay_cell(en2, row_times(c, tinv), threads);
    for (std::size_t v = 0; v < cell.vertices.size(); ++v) {
      RatVec y = row_times(cell.vertices.to_rat_vec(v), tinv);
      IntVec z(n);
      for (std::size_t j = 0; j < n; ++j) z[j] = y[j].get_num();
      std::vector<std::int32_t> z32(n);
      for (std::size_t j = 0; j < n; ++j) z32[j] = checked_int32(z[j]);
      if (!res.new_cell.vertices.contains(z32)) throw IntegrityError("extended cell misses a vertex of D");
    }
  }

  if (symmetry_kind(res.new_cell) != SymmetryKind::centrally_symmetric)
    throw IntegrityError("extended cell is not centrally symmetric");
  if (with_perfection && res.new_cell.full_dimensional) {
    res.perfection_before = perfection_rank(cell, g).perfection_rank;
    res.perfection_after = perfection_rank(res.new_cell, res.new_gram).perfection_rank;
  }
  return res;
}

}  // namespace delone
