#include "delone/analysis/quadratic.hpp"

#include "delone/exact/rank.hpp"

namespace delone {

Rational QuadraticFunction::operator()(std::span<const std::int32_t> x) const {
  RatVec v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = x[i];
  return (*this)(v);
}

Rational QuadraticFunction::operator()(const RatVec& x) const {
  if (x.size() != b.size()) throw PreconditionError("quadratic function dimension mismatch");
  return bilinear(x, q, x) + dot(b, x) + c0;
}

QuadraticFunction build_fD(const DelaunayCell& cell, const RatMatrix& gram) {
  const std::size_t n = gram.rows();
  if (cell.center.size() != n) throw PreconditionError("cell and Gram dimensions differ");
  QuadraticFunction f;
  f.q = gram;
  RatVec gc = times_col(gram, cell.center);
  f.b = RatVec(n);
  for (std::size_t i = 0; i < n; ++i) f.b[i] = -2 * gc[i];
  f.c0 = dot(cell.center, gc) - cell.radius_sq;
  return f;
}

PerfectionReport perfection_rank(const DelaunayCell& cell, const RatMatrix& gram) {
  const std::size_t n = gram.rows();
  if (!cell.full_dimensional || cell.vertices.dim() != n)
    throw PreconditionError("perfection rank needs a full-dimensional cell");
  const std::size_t cols = n * (n + 1) / 2 + n + 1;

  // one row per vertex: x_i x_j (i <= j), x_i, 1
  RatMatrix m(cell.vertices.size(), cols);
  for (std::size_t v = 0; v < cell.vertices.size(); ++v) {
    auto x = cell.vertices[v];
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m(v, c++) = Integer(std::int64_t(x[i]) * x[j]);
    for (std::size_t i = 0; i < n; ++i) m(v, c++) = x[i];
    m(v, c) = 1;
  }

  QuadraticFunction f = build_fD(cell, gram);
  RatVec coef(cols);
  {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) coef[c++] = i == j ? f.q(i, i) : 2 * f.q(i, j);
    for (std::size_t i = 0; i < n; ++i) coef[c++] = f.b[i];
    coef[c] = f.c0;
  }
  RatVec residual = times_col(m, coef);
  for (const auto& r : residual)
    if (r != 0) throw IntegrityError("f_D does not vanish on the vertices");

  RankCertificate cert = certified_rank(m);
  PerfectionReport out;
  out.dim_quadratics = cols;
  out.constraint_rank = cert.rank;
  out.perfection_rank = cols - cert.rank;
  out.is_perfect = out.perfection_rank == 1;
  out.primes = cert.primes.size();
  out.exact_fallback = cert.exact_fallback;
  if (out.perfection_rank == 0) throw IntegrityError("quadratic constraints have trivial kernel");
  return out;
}

}  // namespace delone
