#include "delone/exact/lll.hpp"

namespace delone {

namespace {

struct LllState {
  RatMatrix g;
  IntMatrix t;
  RatMatrix mu;
  RatVec b;  // squared Gram-Schmidt norms
  std::size_t n;

  // b_k <- b_k - q b_l
  void subtract(std::size_t k, std::size_t l, const Integer& q) {
    const Rational qq(q);
    Rational gkk = g(k, k) - 2 * qq * g(k, l) + qq * qq * g(l, l);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == k) continue;
      g(k, j) -= qq * g(l, j);
      g(j, k) = g(k, j);
    }
    g(k, k) = gkk;
    for (std::size_t i = 0; i < n; ++i) t(i, k) -= q * t(i, l);
  }

  void swap(std::size_t a, std::size_t c) {
    g.swap_rows(a, c);
    for (std::size_t i = 0; i < n; ++i) std::swap(g(i, a), g(i, c));
    for (std::size_t i = 0; i < n; ++i) std::swap(t(i, a), t(i, c));
  }

  void orthogonalize(std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      Rational s = g(k, j);
      for (std::size_t i = 0; i < j; ++i) s -= mu(j, i) * mu(k, i) * b[i];
      mu(k, j) = s / b[j];
    }
    Rational s = g(k, k);
    for (std::size_t j = 0; j < k; ++j) s -= mu(k, j) * mu(k, j) * b[j];
    if (s <= 0) throw PreconditionError("Gram matrix is not positive definite");
    b[k] = s;
  }

  void reduce(std::size_t k, std::size_t l) {
    if (abs(mu(k, l)) * 2 <= 1) return;
    Integer q = round_nearest(mu(k, l));
    subtract(k, l, q);
    mu(k, l) -= q;
    for (std::size_t i = 0; i < l; ++i) mu(k, i) -= Rational(q) * mu(l, i);
  }
};

}  // namespace

LllResult lll_reduce(const RatMatrix& gram, const Rational& delta) {
  if (!gram.is_symmetric()) throw PreconditionError("Gram matrix is not symmetric");
  const std::size_t n = gram.rows();
  LllState s{gram, IntMatrix::identity(n), RatMatrix(n, n), RatVec(n), n};
  if (n == 0) return {s.g, s.t};
  if (s.g(0, 0) <= 0) throw PreconditionError("Gram matrix is not positive definite");
  s.b[0] = s.g(0, 0);
  std::size_t k = 1, kmax = 0;
  while (k < n) {
    if (k > kmax) {
      kmax = k;
      s.orthogonalize(k);
    }
    s.reduce(k, k - 1);
    if (s.b[k] < (delta - s.mu(k, k - 1) * s.mu(k, k - 1)) * s.b[k - 1]) {
      // swap b_k and b_{k-1}, update the Gram-Schmidt data in place
      s.swap(k, k - 1);
      for (std::size_t j = 0; j + 1 < k; ++j) std::swap(s.mu(k, j), s.mu(k - 1, j));
      Rational m = s.mu(k, k - 1);
      Rational bb = s.b[k] + m * m * s.b[k - 1];
      s.mu(k, k - 1) = m * s.b[k - 1] / bb;
      s.b[k] = s.b[k - 1] * s.b[k] / bb;
      s.b[k - 1] = bb;
      for (std::size_t i = k + 1; i <= kmax; ++i) {
        Rational tt = s.mu(i, k);
        s.mu(i, k) = s.mu(i, k - 1) - m * tt;
        s.mu(i, k - 1) = tt + s.mu(k, k - 1) * s.mu(i, k);
      }
      if (k > 1) --k;
    } else {
      for (std::size_t l = k - 1; l-- > 0;) s.reduce(k, l);
      ++k;
    }
  }
  return {s.g, s.t};
}

}  // namespace delone
