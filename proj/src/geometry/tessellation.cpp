#include "delone/geometry/tessellation.hpp"

#include <deque>
#include <map>
#include <random>

#include "delone/exact/normal_form.hpp"

namespace delone {

namespace {

// Moves the center of an empty sphere along u, keeping the points with
// <u, q - p0> = 0 on the sphere, until new lattice points become co-spherical.
// gu = G u. Returns the new center.
RatVec pivot(const Enumerator& en, const RatVec& center, const Rational& r0, const RatVec& p0, const RatVec& u,
             const RatVec& gu, unsigned threads) {
  const RatMatrix& g = en.gram();
  const std::size_t n = center.size();
  Rational uu = dot(u, gu);
  if (uu <= 0) throw PreconditionError("degenerate pivot direction");
  // first step moves the center by roughly a quarter of the shortest basis length
  Rational t = Rational(1, 4) / Rational(ceil(Rational(uu)));
  for (int round = 0; round < 200; ++round) {
    RatVec ct = center;
    for (std::size_t i = 0; i < n; ++i) ct[i] += t * u[i];
    RatVec d0 = ct;
    for (std::size_t i = 0; i < n; ++i) d0[i] -= p0[i];
    Rational rt = bilinear(d0, g, d0);
    BallPoints b = en.ball(ct, rt, threads);
    bool found = false;
    Rational best;
    for (std::size_t k = 0; k < b.points.size(); ++k) {
      RatVec q = b.points.to_rat_vec(k);
      Rational side = 0;
      for (std::size_t i = 0; i < n; ++i) side += gu[i] * (q[i] - p0[i]);
      if (side <= 0) continue;
      RatVec dq = center;
      for (std::size_t i = 0; i < n; ++i) dq[i] -= q[i];
      Rational tq = (bilinear(dq, g, dq) - r0) / (2 * side);
      if (tq <= 0) throw IntegrityError("sphere was not empty before pivoting");
      if (!found || tq < best) {
        best = tq;
        found = true;
      }
    }
    if (found) {
      RatVec out = center;
      for (std::size_t i = 0; i < n; ++i) out[i] += best * u[i];
      return out;
    }
    t *= 2;
  }
  throw IntegrityError("pivot did not meet a lattice point");
}

}  // namespace

DelaunayCell start_cell(const Enumerator& en, std::uint64_t seed, unsigned threads) {
  const std::size_t n = en.rank();
  if (n == 0) throw PreconditionError("rank-0 lattice has no cells");
  std::mt19937_64 rng(seed);
  const Integer den = Integer(3) << 12;
  RatVec c(n);
  for (auto& x : c) x = make_rational(Integer(static_cast<unsigned long>(rng() % (3u << 12))), den);
  ClosestPoints cp = en.closest(c, threads);
  PointSet pts = cp.points;
  Rational r0 = cp.dist_sq;
  for (;;) {
    AffineFrame f = affine_frame(pts);
    if (f.dim == n) break;
    RatVec p0 = pts.to_rat_vec(0);
    // directions G-orthogonal to the affine span of the current points
    RatMatrix m(f.dim, n);
    for (std::size_t k = 0; k < f.dim; ++k) {
      RatVec e = pts.to_rat_vec(f.basis[k + 1]);
      for (std::size_t i = 0; i < n; ++i) e[i] -= p0[i];
      RatVec ge = row_times(e, en.gram());
      for (std::size_t i = 0; i < n; ++i) m(k, i) = ge[i];
    }
    KernelBasis kb = kernel_rational(m);
    RatVec u = to_rational(kb.basis.row_vec(0));
    RatVec gu = times_col(en.gram(), u);
    c = pivot(en, c, r0, p0, u, gu, threads);
    RatVec d = c;
    for (std::size_t i = 0; i < n; ++i) d[i] -= p0[i];
    r0 = bilinear(d, en.gram(), d);
    EmptinessCertificate cert = verify_empty_sphere(en, c, r0, threads);
    if (!cert.empty) throw IntegrityError("pivoted sphere is not empty");
    pts = std::move(cert.boundary);
  }
  return delaunay_cell(en, c, threads);
}

DelaunayCell adjacent_cell(const Enumerator& en, const DelaunayCell& cell, const Facet& facet, unsigned threads) {
  const std::size_t n = en.rank();
  if (!cell.full_dimensional) throw PreconditionError("adjacent cells need a full-dimensional cell");
  if (facet.vertices.size() < n) throw PreconditionError("not a facet");
  RatVec gu = to_rational(facet.normal);
  RatVec u = solve_left(en.gram(), gu);  // G symmetric
  RatVec p0 = cell.vertices.to_rat_vec(facet.vertices.front());
  if (dot(gu, p0) != Rational(facet.offset)) throw PreconditionError("facet functional does not fit the cell");
  RatVec c = pivot(en, cell.center, cell.radius_sq, p0, u, gu, threads);
  return delaunay_cell(en, c, threads);
}

std::vector<DelaunayCell> tessellate(const Enumerator& en, const TessellationOptions& opts) {
  if (en.rank() > opts.max_rank && !opts.allow_large)
    throw PreconditionError("rank " + std::to_string(en.rank()) + " exceeds the tessellation guard " +
                            std::to_string(opts.max_rank));
  std::map<std::vector<std::int32_t>, std::size_t> seen;
  std::vector<DelaunayCell> classes;
  std::deque<std::size_t> queue;
  auto add = [&](const DelaunayCell& cell) {
    IntVec shift;
    PointSet canon = canonical_translate(cell.vertices, &shift);
    std::vector<std::int32_t> key(canon.data(), canon.data() + canon.size() * canon.dim());
    if (seen.count(key)) return;
    seen.emplace(std::move(key), classes.size());
    DelaunayCell rep = translate(cell, shift);
    rep.vertices = std::move(canon);
    queue.push_back(classes.size());
    classes.push_back(std::move(rep));
  };
  add(start_cell(en, opts.seed, opts.threads));
  while (!queue.empty()) {
    std::size_t idx = queue.front();
    queue.pop_front();
    DelaunayCell cell = classes[idx];
    for (const Facet& f : facets(cell.vertices)) add(adjacent_cell(en, cell, f, opts.threads));
  }
  return classes;
}

Rational covering_radius_sq(const Enumerator& en, const TessellationOptions& opts) {
  Rational best = 0;
  for (const auto& c : tessellate(en, opts)) best = std::max(best, c.radius_sq);
  return best;
}

}  // namespace delone
