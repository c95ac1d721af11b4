#include "delone/exact/matrix.hpp"

#include <numeric>

namespace delone {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

IntMatrix clear_denominators(const RatMatrix& m, Integer* denominator) {
  Integer d = lcm_denominators(m.data());
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational s = m(i, j) * d;
      out(i, j) = s.get_num();
    }
  if (denominator != nullptr) *denominator = d;
  return out;
}

bool is_integral(const RatMatrix& m) {
  return std::all_of(m.data().begin(), m.data().end(), [](const Rational& q) { return q.get_den() == 1; });
}

IntMatrix to_integer(const RatMatrix& m) {
  if (!is_integral(m)) throw IntegrityError("matrix has non-integral entries");
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_num();
  return out;
}

RatVec row_times(const RatVec& v, const RatMatrix& m) {
  if (v.size() != m.rows()) throw PreconditionError("vector-matrix dimension mismatch");
  RatVec out(m.cols(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

IntVec row_times(const IntVec& v, const IntMatrix& m) {
  if (v.size() != m.rows()) throw PreconditionError("vector-matrix dimension mismatch");
  IntVec out(m.cols(), Integer(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

RatVec times_col(const RatMatrix& m, const RatVec& v) {
  if (v.size() != m.cols()) throw PreconditionError("matrix-vector dimension mismatch");
  RatVec out(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (v[j] != 0) out[i] += m(i, j) * v[j];
  return out;
}

Rational dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw PreconditionError("dot product dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational bilinear(const RatVec& a, const RatMatrix& g, const RatVec& b) { return dot(row_times(a, g), b); }

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of non-square matrix");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      a.swap_rows(p, c);
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      Rational f = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw PreconditionError("matrix is singular");
    a.swap_rows(p, c);
    inv.swap_rows(p, c);
    Rational piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      Rational f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

RatVec solve_left(const RatMatrix& a, const RatVec& b) { return row_times(b, inverse(a)); }

bool ldl_upper(const RatMatrix& gram, RatMatrix* r_out, RatVec* d_out) {
  if (!gram.is_symmetric()) return false;
  const std::size_t n = gram.rows();
  RatMatrix r = RatMatrix::identity(n);
  RatVec d(n);
  // G = R^T D R, R unit upper triangular: G_ij = sum_{k<=min(i,j)} R_ki D_k R_kj
  for (std::size_t i = 0; i < n; ++i) {
    Rational s = gram(i, i);
    for (std::size_t k = 0; k < i; ++k) s -= r(k, i) * r(k, i) * d[k];
    if (s <= 0) return false;
    d[i] = s;
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational t = gram(i, j);
      for (std::size_t k = 0; k < i; ++k) t -= r(k, i) * d[k] * r(k, j);
      r(i, j) = t / d[i];
    }
  }
  if (r_out != nullptr) *r_out = std::move(r);
  if (d_out != nullptr) *d_out = std::move(d);
  return true;
}

bool is_positive_definite(const RatMatrix& gram) { return ldl_upper(gram, nullptr, nullptr); }

std::int32_t checked_int32(const Integer& z) {
  if (!z.fits_sint_p()) throw IntegrityError("coordinate exceeds 32-bit range");
  return static_cast<std::int32_t>(z.get_si());
}

void PointSet::push_back(std::span<const std::int32_t> p) {
  if (p.size() != dim_) throw PreconditionError("point dimension mismatch");
  if (dim_ == 0) {
    ++count_;
    return;
  }
  data_.insert(data_.end(), p.begin(), p.end());
}

void PointSet::push_back(const IntVec& p) {
  if (p.size() != dim_) throw PreconditionError("point dimension mismatch");
  if (dim_ == 0) {
    ++count_;
    return;
  }
  for (const auto& z : p) data_.push_back(checked_int32(z));
}

void PointSet::sort_unique() {
  const std::size_t n = size();
  if (dim_ == 0) {
    count_ = std::min<std::size_t>(count_, 1);
    return;
  }
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  auto row = [this](std::size_t i) { return data_.begin() + static_cast<std::ptrdiff_t>(i * dim_); };
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(row(a), row(a) + dim_, row(b), row(b) + dim_);
  });
  std::vector<std::int32_t> out;
  out.reserve(data_.size());
  for (std::size_t k = 0; k < n; ++k) {
    auto r = row(idx[k]);
    if (k > 0 && std::equal(r, r + dim_, out.end() - static_cast<std::ptrdiff_t>(dim_))) continue;
    out.insert(out.end(), r, r + dim_);
  }
  data_ = std::move(out);
}

bool PointSet::contains(std::span<const std::int32_t> p) const {
  std::size_t lo = 0;
  std::size_t hi = size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    auto r = (*this)[mid];
    if (std::lexicographical_compare(r.begin(), r.end(), p.begin(), p.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo < size() && std::equal(p.begin(), p.end(), (*this)[lo].begin());
}

IntVec PointSet::to_int_vec(std::size_t i) const {
  IntVec v(dim_);
  auto r = (*this)[i];
  for (std::size_t k = 0; k < dim_; ++k) v[k] = r[k];
  return v;
}

RatVec PointSet::to_rat_vec(std::size_t i) const {
  RatVec v(dim_);
  auto r = (*this)[i];
  for (std::size_t k = 0; k < dim_; ++k) v[k] = r[k];
  return v;
}

}  // namespace delone
