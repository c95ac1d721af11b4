#include "delone/constructions/main_delaunay.hpp"

#include <sstream>

#include "delone/analysis/design.hpp"
#include "delone/analysis/structure.hpp"
#include "delone/exact/normal_form.hpp"

namespace delone {

LeechContext LeechContext::build(unsigned threads) {
  LeechContext ctx;
  ctx.leech = build_leech();
  ctx.min = minimal_vectors(ctx.leech, 196560, threads);
  return ctx;
}

namespace {

// Integer points given by ambient integer vectors, mapped through x -> x P.
PointSet map_points(const std::vector<std::vector<Integer>>& xs, const RatMatrix& p) {
  Integer pd = 1;
  for (const auto& e : p.data()) pd = lcm(pd, Integer(e.get_den()));
  IntMatrix pn(p.rows(), p.cols());
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j) pn(i, j) = Rational(p(i, j) * pd).get_num();
  PointSet out(p.cols());
  out.reserve(xs.size());
  IntVec y(p.cols());
  for (const auto& x : xs) {
    for (std::size_t j = 0; j < p.cols(); ++j) {
      Integer s = 0;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) s += x[i] * pn(i, j);
      if (!mpz_divisible_p(s.get_mpz_t(), pd.get_mpz_t())) throw IntegrityError("slice point outside the host lattice");
      y[j] = s / pd;
    }
    out.push_back(y);
  }
  return out;
}

}  // namespace

std::vector<std::size_t> slice_rows(const LeechContext& ctx, const IntVec& v, long alpha) {
  const std::size_t a = ctx.min.ambient_dim;
  RatVec v_amb = ctx.leech.point(v);
  std::vector<std::int32_t> v32(a);
  for (std::size_t j = 0; j < a; ++j) {
    if (v_amb[j].get_den() != 1) throw PreconditionError("ambient vector is not integral");
    v32[j] = checked_int32(v_amb[j].get_num());
  }
  std::vector<std::int64_t> ip = inner_products_scaled(ctx.min, v32);
  const Integer target = Integer(ctx.leech.form()(0, 0).get_den()) * alpha;
  std::vector<std::size_t> rows;
  for (std::size_t k = 0; k < ip.size(); ++k)
    if (Integer(static_cast<long>(ip[k])) == target) rows.push_back(k);
  return rows;
}

MainDelaunayRecord main_delaunay(const LeechContext& ctx, const IntVec& v, long alpha, const Integer& d,
                                 const MainDelaunayOptions& opts) {
  const Lattice& leech = ctx.leech;
  if (alpha == 0) throw PreconditionError("alpha must be nonzero");
  if (gcd_entries(v) != 1) throw PreconditionError("v must be primitive");
  const Rational vv = leech.coord_norm(v);
  if (vv.get_den() != 1 || d <= 0 || vv.get_num() % d != 0) throw PreconditionError("d must divide the norm of v");

  MainDelaunayRecord rec;
  rec.vector_type = classify_leech_vector(leech, v);
  rec.alpha = alpha;
  rec.d = d;

  // slice of the minimal vectors (ambient form (1/8) I)
  const std::size_t a = ctx.min.ambient_dim;
  RatVec v_amb = leech.point(v);
  std::vector<std::size_t> rows = slice_rows(ctx, v, alpha);
  if (rows.empty()) throw PreconditionError("Min_{alpha,v} is empty");
  rec.slice_size = rows.size();

  // translate by the first element into L(v) and map to coordinates of the host
  const std::int32_t* m0 = &ctx.min.ambient[rows[0] * a];
  std::vector<std::vector<Integer>> xs;
  xs.reserve(rows.size());
  for (auto k : rows) {
    std::vector<Integer> x(a);
    for (std::size_t j = 0; j < a; ++j) x[j] = static_cast<long>(ctx.min.ambient[k * a + j]) - m0[j];
    xs.push_back(std::move(x));
  }
  RatVec c_amb(a);
  for (std::size_t j = 0; j < a; ++j) c_amb[j] = Rational(alpha) * v_amb[j] / vv - m0[j];

  Lattice section = orthogonal_section(leech, v);
  Lattice host = glue_lattice(section, d);
  RatMatrix p = coordinate_map(host);
  PointSet pts = map_points(xs, p);
  RatVec c = row_times(c_amb, p);
  const Rational expected_r2 = 4 - Rational(alpha * alpha) / vv;

  const RatMatrix glue_gram = host.gram();
  const std::size_t glue_rank = host.rank();
  AffineFrame frame = affine_frame(pts);
  rec.affine_dim = frame.dim;
  Rational r2 = expected_r2;
  if (frame.dim < host.rank()) {
    // saturate the span of the slice: integer points annihilated by its orthogonal functionals
    IntMatrix diffs(pts.size() - 1, host.rank());
    for (std::size_t i = 1; i < pts.size(); ++i)
      for (std::size_t j = 0; j < host.rank(); ++j) diffs(i - 1, j) = static_cast<long>(pts[i][j]) - pts[0][j];
    IntMatrix ann = kernel_rational(to_rational(diffs)).basis;
    IntMatrix sat = kernel_rational(to_rational(ann)).basis;
    RatMatrix satq = to_rational(sat);
    host = Lattice(satq * host.basis(), host.form());
    RowSolver solver(satq);
    PointSet sub(sat.rows());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      auto y = solver.solve_integral(pts.to_rat_vec(i));
      if (!y) throw IntegrityError("slice point outside its saturated span");
      sub.push_back(*y);
    }
    // orthogonal projection of the center onto the span
    const RatMatrix g = glue_gram;
    RatVec gc = times_col(g, c);
    RatVec rhs = times_col(satq, gc);
    RatVec cs = solve_left(host.gram(), rhs);
    RatVec back = row_times(cs, satq);
    RatVec diff = c;
    for (std::size_t j = 0; j < c.size(); ++j) diff[j] -= back[j];
    r2 -= bilinear(diff, g, diff);
    pts = std::move(sub);
    c = std::move(cs);
  }
  pts.sort_unique();

  Enumerator en(host.gram());
  rec.cell = delaunay_cell(en, c, opts.threads);
  rec.lattice = host;
  rec.N = rec.cell.vertices.size();
  rec.full_dimensional = frame.dim == glue_rank;
  rec.contains_slice = true;
  for (std::size_t i = 0; i < pts.size() && rec.contains_slice; ++i) rec.contains_slice = rec.cell.vertices.contains(pts[i]);
  EmptinessCertificate cert = verify_empty_sphere(en, rec.cell.center, rec.cell.radius_sq, opts.threads);
  rec.empty_sphere = cert.empty && cert.boundary == rec.cell.vertices;
  rec.verified = rec.contains_slice && rec.empty_sphere && rec.cell.center == c && rec.cell.radius_sq == r2 &&
                 rec.cell.full_dimensional;
  rec.slice = std::move(pts);

  rec.den = tden(rec.cell.center);
  rec.ind = affine_lattice(rec.cell).index;
  if (opts.allow_large || rec.N <= opts.strength_limit)
    rec.s = design_strength(rec.cell, host.gram(), opts.t_max, opts.threads);
  return rec;
}

std::vector<MainDelaunayRecord> table1(const LeechContext& ctx, const IntVec& v, const std::vector<long>& alphas,
                                       const std::vector<Integer>& ds, const MainDelaunayOptions& opts,
                                       const std::function<void(const std::string&)>& progress) {
  const Rational vv = ctx.leech.coord_norm(v);
  if (vv.get_den() != 1) throw PreconditionError("norm of v is not integral");
  const long n = vv.get_num().get_si();
  std::vector<long> as = alphas;
  if (as.empty())
    for (long al = 1; al <= n / 2; ++al) as.push_back(al);
  std::vector<Integer> dl = ds;
  if (dl.empty())
    for (long k = 1; k <= n; ++k)
      if (n % k == 0) dl.emplace_back(k);
  std::vector<MainDelaunayRecord> out;
  for (long al : as)
    for (const auto& d : dl) {
      if (slice_rows(ctx, v, al).empty()) {
        if (progress) progress("alpha=" + std::to_string(al) + " empty slice");
        break;
      }
      if (progress) progress("alpha=" + std::to_string(al) + " d=" + to_string(d));
      out.push_back(main_delaunay(ctx, v, al, d, opts));
    }
  return out;
}

std::string format_record(const MainDelaunayRecord& r) {
  std::ostringstream s;
  s << "type=" << r.vector_type.label() << " d=" << r.d << " N=" << r.N << " den=" << r.den << " s=";
  if (r.s) s << *r.s;
  else s << "skipped";
  s << " ind=" << r.ind << " verified=" << (r.verified ? "true" : "false") << " alpha=" << r.alpha;
  if (!r.full_dimensional) s << " dim=" << r.affine_dim;
  return s.str();
}

}  // namespace delone
