#include "delone/constructions/covering.hpp"

namespace delone {

Rational covering_bound(const Lattice& leech, const IntVec& v) {
  if (gcd_entries(v) == 0) throw PreconditionError("v must be nonzero");
  if (gcd_entries(v) != 1) throw PreconditionError("v must be primitive");
  Rational vv = leech.coord_norm(v);
  return 2 - 1 / (4 * vv);
}

RatVec lambda23_smith_point() {
  static constexpr int kQuarter[24] = {1, -1, -3, -1, 3, 3, 1, 5, -1, -1, -1, -7, 1, 1, 1, 5, 3, -1, 1, 5, -1, -5, -1, -7};
  RatVec x;
  for (int q : kQuarter) x.push_back(make_rational(q, 4));
  return x;
}

SmithPointReport check_smith_point(const Lattice& l, const RatVec& c, const Rational& bound, unsigned threads) {
  if (c.size() != l.rank()) throw PreconditionError("point has the wrong dimension");
  Enumerator en(l.gram());
  ClosestPoints cp = en.closest(c, threads);
  SmithPointReport r;
  r.dist_sq = cp.dist_sq;
  r.count = cp.points.size();
  EmptinessCertificate cert = verify_empty_sphere(en, c, cp.dist_sq, threads);
  r.empty = cert.empty && cert.boundary.size() == r.count;
  r.meets_bound = r.dist_sq == bound;
  return r;
}

}  // namespace delone
