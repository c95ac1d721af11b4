#include "delone/exact/normal_form.hpp"

#include <algorithm>

namespace delone {

namespace {

void gcdext(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

// rows (p, q) <- (s p + t q, -(b/g) p + (a/g) q); determinant 1
void combine_rows(IntMatrix& m, std::size_t p, std::size_t q, const Integer& s, const Integer& t, const Integer& x,
                  const Integer& y) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Integer np = s * m(p, j) + t * m(q, j);
    Integer nq = x * m(p, j) + y * m(q, j);
    m(p, j) = std::move(np);
    m(q, j) = std::move(nq);
  }
}

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  if (f == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  if (f == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

Integer fdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteForm hnf(const IntMatrix& m) {
  HermiteForm out;
  out.h = m;
  out.u = IntMatrix::identity(m.rows());
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  const std::size_t r = m.rows();
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < r; ++col) {
    for (std::size_t i = row + 1; i < r; ++i) {
      if (h(i, col) == 0) continue;
      if (h(row, col) == 0) {
        h.swap_rows(row, i);
        u.swap_rows(row, i);
        continue;
      }
      Integer a = h(row, col);
      Integer b = h(i, col);
      Integer g, s, t;
      gcdext(a, b, g, s, t);
      Integer x = -b / g;
      Integer y = a / g;
      combine_rows(h, row, i, s, t, x, y);
      combine_rows(u, row, i, s, t, x, y);
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      negate_row(h, row);
      negate_row(u, row);
    }
    for (std::size_t i = 0; i < row; ++i) {
      Integer q = fdiv(h(i, col), h(row, col));
      add_row_multiple(h, i, row, -q);
      add_row_multiple(u, i, row, -q);
    }
    ++row;
  }
  out.rank = row;
  return out;
}

SmithForm smith(const IntMatrix& m) {
  SmithForm out;
  out.s = m;
  out.u = IntMatrix::identity(m.rows());
  out.v = IntMatrix::identity(m.cols());
  IntMatrix& s = out.s;
  IntMatrix& u = out.u;
  IntMatrix& v = out.v;
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  const std::size_t lim = std::min(r, c);

  auto move_min_to = [&](std::size_t t, bool whole) {
    // whole: search the trailing submatrix; otherwise row t and column t only
    std::size_t bi = r, bj = c;
    Integer best;
    auto consider = [&](std::size_t i, std::size_t j) {
      if (s(i, j) == 0) return;
      Integer a = abs(s(i, j));
      if (bi == r || a < best) {
        best = a;
        bi = i;
        bj = j;
      }
    };
    if (whole) {
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j) consider(i, j);
    } else {
      for (std::size_t i = t; i < r; ++i) consider(i, t);
      for (std::size_t j = t; j < c; ++j) consider(t, j);
    }
    if (bi == r) return false;
    s.swap_rows(t, bi);
    u.swap_rows(t, bi);
    swap_cols(s, t, bj);
    swap_cols(v, t, bj);
    return true;
  };

  for (std::size_t t = 0; t < lim; ++t) {
    if (!move_min_to(t, true)) break;
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (s(i, t) == 0) continue;
        Integer q = fdiv(s(i, t), s(t, t));
        add_row_multiple(s, i, t, -q);
        add_row_multiple(u, i, t, -q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (s(t, j) == 0) continue;
        Integer q = fdiv(s(t, j), s(t, t));
        add_col_multiple(s, j, t, -q);
        add_col_multiple(v, j, t, -q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) {
        move_min_to(t, false);
        continue;
      }
      bool divisible = true;
      for (std::size_t i = t + 1; i < r && divisible; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (s(i, j) % s(t, t) != 0) {
            add_row_multiple(s, t, i, Integer(1));
            add_row_multiple(u, t, i, Integer(1));
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (s(t, t) < 0) {
      negate_row(s, t);
      negate_row(u, t);
    }
  }
  for (std::size_t t = 0; t < lim; ++t)
    if (s(t, t) != 0) out.diagonal.push_back(s(t, t));
  return out;
}

std::vector<Integer> elementary_divisors(const IntMatrix& m) { return smith(m).diagonal; }

KernelBasis kernel_rational(const RatMatrix& m) {
  const std::size_t c = m.cols();
  IntMatrix a(c, m.rows());  // transpose of the row-scaled matrix
  for (std::size_t i = 0; i < m.rows(); ++i) {
    RatVec row = m.row_vec(i);
    Integer d = lcm_denominators(row);
    for (std::size_t j = 0; j < c; ++j) a(j, i) = Rational(row[j] * d).get_num();
  }
  HermiteForm hf = hnf(a);
  KernelBasis out;
  out.basis = hf.u.rows_range(hf.rank, c);
  IntMatrix uinv = to_integer(inverse(to_rational(hf.u)));
  out.coordinates = IntMatrix(c, c - hf.rank);
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = hf.rank; j < c; ++j) out.coordinates(i, j - hf.rank) = uinv(i, j);
  return out;
}

IntMatrix lattice_basis(const IntMatrix& generators) {
  LatticeAccumulator acc(generators.cols());
  for (std::size_t i = 0; i < generators.rows(); ++i) acc.insert(generators.row_vec(i));
  return acc.basis();
}

void LatticeAccumulator::insert(IntVec v) {
  if (v.size() != dim_) throw PreconditionError("accumulator dimension mismatch");
  for (;;) {
    std::size_t fc = 0;
    while (fc < dim_ && v[fc] == 0) ++fc;
    if (fc == dim_) return;
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), fc);
    std::size_t k = static_cast<std::size_t>(it - pivots_.begin());
    if (it == pivots_.end() || *it != fc) {
      if (v[fc] < 0)
        for (auto& z : v) z = -z;
      pivots_.insert(it, fc);
      rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(k), std::move(v));
      return;
    }
    IntVec& row = rows_[k];
    const Integer a = row[fc];
    const Integer b = v[fc];
    if (b % a == 0) {
      Integer q = b / a;
      for (std::size_t j = fc; j < dim_; ++j) v[j] -= q * row[j];
      continue;
    }
    Integer g, s, t;
    gcdext(a, b, g, s, t);
    Integer x = -b / g;
    Integer y = a / g;
    for (std::size_t j = fc; j < dim_; ++j) {
      Integer nr = s * row[j] + t * v[j];
      Integer nv = x * row[j] + y * v[j];
      row[j] = std::move(nr);
      v[j] = std::move(nv);
    }
    if (row[fc] < 0)
      for (auto& z : row) z = -z;
  }
}

IntMatrix LatticeAccumulator::basis() const {
  IntMatrix m(rows_.size(), dim_);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(i, j) = rows_[i][j];
  HermiteForm hf = hnf(m);
  return hf.h.rows_range(0, hf.rank);
}

bool LatticeAccumulator::is_unimodular_full() const {
  if (rows_.size() != dim_) return false;
  for (std::size_t k = 0; k < rows_.size(); ++k)
    if (abs(rows_[k][pivots_[k]]) != 1) return false;
  return true;
}

RowSolver::RowSolver(const RatMatrix& basis) : basis_(basis) {
  RatMatrix bt = basis.transpose();
  pseudo_ = bt * inverse(basis * bt);
}

std::optional<RatVec> RowSolver::solve(const RatVec& x) const {
  if (x.size() != basis_.cols()) throw PreconditionError("solver dimension mismatch");
  RatVec y = row_times(x, pseudo_);
  if (row_times(y, basis_) != x) return std::nullopt;
  return y;
}

std::optional<IntVec> RowSolver::solve_integral(const RatVec& x) const {
  auto y = solve(x);
  if (!y) return std::nullopt;
  IntVec out;
  out.reserve(y->size());
  for (const auto& q : *y) {
    if (q.get_den() != 1) return std::nullopt;
    out.push_back(q.get_num());
  }
  return out;
}

}  // namespace delone
