#include "delone/constructions/classify.hpp"

#include "delone/geometry/enumerate.hpp"

namespace delone {

std::string LeechVectorType::label() const {
  std::string s = std::to_string(n);
  if (decomposition) s += "_{" + std::to_string(decomposition->first) + "," + std::to_string(decomposition->second) + "}";
  return s;
}

LeechVectorType classify_leech_vector(const Lattice& leech, const IntVec& v) {
  if (v.size() != leech.rank()) throw PreconditionError("vector has the wrong dimension");
  Rational norm = leech.coord_norm(v);
  if (norm == 0) throw PreconditionError("zero vector has no type");
  if (norm.get_den() != 1 || norm.get_num() % 2 != 0) throw PreconditionError("odd norm: not a Leech vector");
  if (norm > 22) throw PreconditionError("classification is limited to norm <= 22");
  LeechVectorType t;
  t.n = static_cast<unsigned>(norm.get_num().get_ui() / 2);
  Integer g = gcd_entries(v);
  if (g != 1 && t.n != 8) throw PreconditionError("vector is not primitive");
  if (g != 1 && g != 2) throw PreconditionError("vector is not primitive");
  const bool ambiguous = t.n == 6 || t.n == 8 || t.n == 9 || t.n == 10 || t.n == 11;
  if (!ambiguous) return t;

  // |u - v/2|^2 = (a + b) - n/2, so decompositions with the least a + b are the
  // lattice points nearest v/2 other than 0 and v.
  Enumerator en(leech.gram());
  RatVec half(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) half[i] = make_rational(v[i], 2);
  const Rational n_half = make_rational(t.n, 2);
  for (unsigned s = 4; s <= t.n; ++s) {
    Rational bound = Rational(s) - n_half;
    if (bound < 0) continue;
    BallPoints ball = en.ball(half, bound);
    std::optional<std::pair<unsigned, unsigned>> best;
    IntVec bu1, bu2;
    for (std::size_t k = 0; k < ball.points.size(); ++k) {
      if (ball.dist_sq[k] != bound) continue;
      IntVec u = ball.points.to_int_vec(k);
      IntVec w(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] - u[i];
      Rational nu = leech.coord_norm(u), nw = leech.coord_norm(w);
      if (nu == 0 || nw == 0) continue;
      auto b = static_cast<unsigned>(Integer(std::min(nu, nw).get_num() / 2).get_ui());
      auto a = static_cast<unsigned>(Integer(std::max(nu, nw).get_num() / 2).get_ui());
      if (!best || b < best->second) {
        best = std::make_pair(a, b);
        bu1 = nu >= nw ? u : w;
        bu2 = nu >= nw ? w : u;
      }
    }
    if (best) {
      t.decomposition = best;
      t.u1 = std::move(bu1);
      t.u2 = std::move(bu2);
      return t;
    }
  }
  throw IntegrityError("no decomposition found for a vector of type " + std::to_string(t.n));
}

}  // namespace delone
