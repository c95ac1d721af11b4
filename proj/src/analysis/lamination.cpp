#include "delone/analysis/lamination.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <thread>

#include "delone/analysis/structure.hpp"
#include "delone/exact/normal_form.hpp"
#include "delone/lattice/sublattices.hpp"

namespace delone {

namespace {

Integer value_at(const IntVec& a, std::span<const std::int32_t> v) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (v[i] != 0) s += a[i] * static_cast<long>(v[i]);
  return s;
}

// Layers of a relative to s0; nullopt unless every value is 0 or 1.
std::optional<LaminationPartition> partition_for(const PointSet& pts, std::size_t s0, IntVec a) {
  LaminationPartition out;
  out.offset = value_at(a, pts[s0]);
  for (std::size_t v = 0; v < pts.size(); ++v) {
    Integer d = value_at(a, pts[v]) - out.offset;
    if (d == 0) out.layer0.push_back(v);
    else if (d == 1) out.layer1.push_back(v);
    else return std::nullopt;
  }
  if (out.layer1.empty()) return std::nullopt;
  out.functional = std::move(a);
  return out;
}

void sort_partitions(std::vector<LaminationPartition>& out) {
  std::sort(out.begin(), out.end(),
            [](const LaminationPartition& x, const LaminationPartition& y) { return x.functional < y.functional; });
}

AffineFrame full_frame(const PointSet& vertices) {
  if (vertices.empty()) throw PreconditionError("empty vertex set");
  AffineFrame f = affine_frame(vertices);
  if (f.dim != vertices.dim()) throw PreconditionError("2-laminations need a full-dimensional vertex set");
  return f;
}


constexpr std::uint64_t kPrime = 2147483647ULL;

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  for (b %= kPrime; e; e >>= 1, b = b * b % kPrime)
    if (e & 1) r = r * b % kPrime;
  return r;
}

// Rank of {p_v - p_0} mod a prime reaches n; this certifies an affine span of
// full dimension (rank mod p never exceeds rank over Q). false is inconclusive.
bool spans_mod_p(const std::int32_t* flat, std::size_t count, std::size_t n) {
  if (n == 0) return true;
  std::vector<std::uint64_t> rows;
  std::vector<std::size_t> piv;
  std::vector<std::uint64_t> r(n);
  for (std::size_t v = 1; v < count && piv.size() < n; ++v) {
    for (std::size_t i = 0; i < n; ++i) {
      long long d = static_cast<long long>(flat[v * n + i]) - flat[i];
      r[i] = static_cast<std::uint64_t>((d % static_cast<long long>(kPrime) + static_cast<long long>(kPrime))) % kPrime;
    }
    for (std::size_t k = 0; k < piv.size(); ++k) {
      std::uint64_t c = r[piv[k]];
      if (c == 0) continue;
      const std::uint64_t* row = &rows[k * n];
      for (std::size_t i = 0; i < n; ++i) r[i] = (r[i] + (kPrime - c) * row[i]) % kPrime;
    }
    std::size_t j = 0;
    while (j < n && r[j] == 0) ++j;
    if (j == n) continue;
    std::uint64_t inv = pow_mod(r[j], kPrime - 2);
    for (auto& e : r) e = e * inv % kPrime;
    rows.insert(rows.end(), r.begin(), r.end());
    piv.push_back(j);
  }
  return piv.size() == n;
}

constexpr __int128 kGramLimit = __int128(1) << 62;

bool fits(__int128 z) { return z < kGramLimit && z > -kGramLimit; }

// LLL on an exact int64 Gram with long double Gram-Schmidt data; T tracks the
// unimodular change (rows = new basis in old coordinates). Only speed depends
// on the quality of the result. false on overflow or runaway.
bool lll_gram(std::vector<std::int64_t>& g, std::vector<std::int64_t>& t, std::size_t n) {
  t.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) t[i * n + i] = 1;
  if (n < 2) return true;
  std::vector<long double> mu(n * n, 0), r(n * n, 0), bb(n, 0);
  auto G = [&](std::size_t i, std::size_t j) -> std::int64_t& { return g[i * n + j]; };
  auto gso_row = [&](std::size_t k) {
    for (std::size_t j = 0; j <= k; ++j) {
      long double v = static_cast<long double>(G(k, j));
      for (std::size_t i = 0; i < j; ++i) v -= mu[j * n + i] * r[k * n + i];
      r[k * n + j] = v;
      if (j < k) mu[k * n + j] = v / bb[j];
    }
    bb[k] = r[k * n + k];
  };
  auto sub_row = [&](std::size_t k, std::size_t j, std::int64_t q) {  // b_k -= q b_j
    __int128 kk = __int128(G(k, k)) - 2 * __int128(q) * G(k, j) + __int128(q) * q * G(j, j);
    if (!fits(kk)) return false;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      __int128 v = __int128(G(k, i)) - __int128(q) * G(j, i);
      if (!fits(v)) return false;
      G(k, i) = G(i, k) = static_cast<std::int64_t>(v);
    }
    G(k, k) = static_cast<std::int64_t>(kk);
    for (std::size_t i = 0; i < n; ++i) {
      __int128 v = __int128(t[k * n + i]) - __int128(q) * t[j * n + i];
      if (!fits(v)) return false;
      t[k * n + i] = static_cast<std::int64_t>(v);
    }
    return true;
  };
  bb[0] = static_cast<long double>(G(0, 0));
  std::size_t k = 1;
  for (std::size_t iter = 0; k < n; ++iter) {
    if (iter > 200000) return false;
    gso_row(k);
    bool reduced = false;
    for (std::size_t jj = k; jj-- > 0;) {
      long double m = mu[k * n + jj];
      if (fabsl(m) <= 0.51L) continue;
      if (fabsl(m) > 1e15L) return false;
      auto q = static_cast<std::int64_t>(llroundl(m));
      if (!sub_row(k, jj, q)) return false;
      for (std::size_t i = 0; i < jj; ++i) mu[k * n + i] -= q * mu[jj * n + i];
      mu[k * n + jj] -= q;
      reduced = true;
    }
    if (reduced) gso_row(k);
    long double m = mu[k * n + k - 1];
    if (bb[k] < (0.99L - m * m) * bb[k - 1]) {
      for (std::size_t i = 0; i < n; ++i) std::swap(G(k, i), G(k - 1, i));
      for (std::size_t i = 0; i < n; ++i) std::swap(G(i, k), G(i, k - 1));
      for (std::size_t i = 0; i < n; ++i) std::swap(t[k * n + i], t[(k - 1) * n + i]);
      if (k == 1) bb[0] = static_cast<long double>(G(0, 0));
      else --k;
    } else {
      ++k;
    }
  }
  return true;
}

// Functionals a != 0 with a.d in {0,1} for every d = p_v - p_0, found by a
// long double enumeration of the ellipsoid (a-x)^T C (a-x) <= x^T C x with a
// radius margin, then checked exactly. Non-solutions exceed the radius by at
// least 2 (q(a) = sum (a.d)(a.d - 1) is a nonnegative integer), so a margin
// far above rounding error loses nothing. nullopt: guards tripped, use the
// exact path.
std::optional<std::vector<std::vector<std::int64_t>>> laminations_filtered(const std::int32_t* flat, std::size_t count,
                                                                          std::size_t n) {
  std::vector<std::int32_t> d(count * n);
  std::int64_t maxabs = 0;
  for (std::size_t v = 0; v < count; ++v)
    for (std::size_t i = 0; i < n; ++i) {
      d[v * n + i] = flat[v * n + i] - flat[i];
      maxabs = std::max<std::int64_t>(maxabs, std::abs(static_cast<std::int64_t>(d[v * n + i])));
    }
  if (__int128(maxabs) * maxabs * static_cast<__int128>(count) >= (__int128(1) << 40)) return std::nullopt;

  std::vector<std::int64_t> c(n * n, 0), s(n, 0);
  for (std::size_t v = 0; v < count; ++v) {
    const std::int32_t* dv = &d[v * n];
    for (std::size_t i = 0; i < n; ++i) {
      if (dv[i] == 0) continue;
      s[i] += dv[i];
      std::int64_t* row = &c[i * n];
      for (std::size_t j = i; j < n; ++j) row[j] += static_cast<std::int64_t>(dv[i]) * dv[j];
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) c[i * n + j] = c[j * n + i];

  std::vector<std::int64_t> t;
  if (!lll_gram(c, t, n)) return std::nullopt;
  std::vector<std::int64_t> s2(n);  // T s
  for (std::size_t k = 0; k < n; ++k) {
    __int128 v = 0;
    for (std::size_t i = 0; i < n; ++i) v += __int128(t[k * n + i]) * s[i];
    if (!fits(v)) return std::nullopt;
    s2[k] = static_cast<std::int64_t>(v);
  }

  // C' = M diag(r) M^T, M unit lower triangular
  std::vector<long double> mu(n * n, 0), rr(n * n, 0), r(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      long double v = static_cast<long double>(c[k * n + j]);
      for (std::size_t i = 0; i < j; ++i) v -= mu[j * n + i] * rr[k * n + i];
      rr[k * n + j] = v;
      if (j < k) mu[k * n + j] = v / r[j];
    }
    r[k] = rr[k * n + k];
    if (!(r[k] > 0)) return std::nullopt;
  }
  long double rmax = *std::max_element(r.begin(), r.end()), rmin = *std::min_element(r.begin(), r.end());
  if (rmax > 1e12L * rmin) return std::nullopt;

  // C' x = s'/2
  std::vector<long double> x(n);
  for (std::size_t k = 0; k < n; ++k) {
    long double v = s2[k] / 2.0L;
    for (std::size_t j = 0; j < k; ++j) v -= mu[k * n + j] * x[j];
    x[k] = v;
  }
  for (std::size_t k = 0; k < n; ++k) x[k] /= r[k];
  for (std::size_t k = n; k-- > 0;)
    for (std::size_t j = k + 1; j < n; ++j) x[k] -= mu[j * n + k] * x[j];
  long double radius = 0;
  for (std::size_t k = 0; k < n; ++k) radius += x[k] * s2[k] / 2.0L;
  if (!(radius >= 0)) return std::nullopt;
  const long double bound = radius + std::max(1.0L, 1e-6L * radius);

  std::vector<std::int64_t> u(n);
  std::vector<std::vector<std::int64_t>> found;
  bool zero_seen = false, overflow = false;
  std::uint64_t nodes = 0;
  std::function<void(std::size_t, long double)> walk = [&](std::size_t i, long double partial) {
    if (overflow) return;
    long double cen = x[i];
    for (std::size_t k = i + 1; k < n; ++k) cen -= mu[k * n + i] * (u[k] - x[k]);
    long double w = sqrtl(std::max(0.0L, (bound - partial) / r[i]));
    long double lo = ceill(cen - w), hi = floorl(cen + w);
    if (hi - lo > 1e6L) {
      overflow = true;
      return;
    }
    for (auto z = static_cast<std::int64_t>(lo); z <= static_cast<std::int64_t>(hi); ++z) {
      if (++nodes > 20000000) {
        overflow = true;
        return;
      }
      long double off = z - cen, p = partial + r[i] * off * off;
      if (p > bound) continue;
      u[i] = z;
      if (i > 0) {
        walk(i - 1, p);
        continue;
      }
      // a = T^T u, checked exactly
      std::vector<std::int64_t> a(n, 0);
      bool nonzero = false;
      for (std::size_t j = 0; j < n; ++j) {
        __int128 v = 0;
        for (std::size_t k = 0; k < n; ++k) v += __int128(u[k]) * t[k * n + j];
        if (!fits(v) || v > (__int128(1) << 30) || v < -(__int128(1) << 30)) {
          overflow = true;
          return;
        }
        a[j] = static_cast<std::int64_t>(v);
        nonzero = nonzero || a[j] != 0;
      }
      if (!nonzero) {
        zero_seen = true;
        continue;
      }
      bool ok = true;
      for (std::size_t v = 0; v < count && ok; ++v) {
        std::int64_t val = 0;
        for (std::size_t j = 0; j < n; ++j) val += a[j] * d[v * n + j];
        ok = val == 0 || val == 1;
      }
      if (ok) found.push_back(std::move(a));
    }
  };
  walk(n - 1, 0);
  // the zero functional always attains the minimum; missing it means the filter is not trustworthy
  if (overflow || !zero_seen) return std::nullopt;
  return found;
}

std::vector<std::int32_t> flatten(const PointSet& pts) {
  std::vector<std::int32_t> flat(pts.size() * pts.dim());
  for (std::size_t v = 0; v < pts.size(); ++v)
    for (std::size_t i = 0; i < pts.dim(); ++i) flat[v * pts.dim() + i] = pts[v][i];
  return flat;
}

std::vector<LaminationPartition> laminations_exact(const PointSet& vertices);

}  // namespace

IntMatrix lamination_sublattice(const IntVec& functional) {
  RatMatrix m(1, functional.size());
  for (std::size_t i = 0; i < functional.size(); ++i) m(0, i) = functional[i];
  return kernel_rational(m).basis;
}

std::vector<LaminationPartition> two_laminations(const PointSet& vertices) {
  const std::size_t n = vertices.dim();
  AffineFrame frame = full_frame(vertices);
  if (n == 0) return {};
  if (n > 30) throw PreconditionError("subset enumeration limited to dimension 30");
  const std::size_t s0 = frame.basis[0];

  // rows d_i = s_i - s0; a solves D a = t, so det(D) a = adj(D) t
  RatMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      d(i, j) = static_cast<long>(vertices[frame.basis[i + 1]][j]) - vertices[s0][j];
  Rational det = determinant(d);
  RatMatrix inv = inverse(d);
  Integer det_abs = abs(det.get_num());
  IntMatrix adj(n, n);  // |det| * inverse, integral
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) adj(i, j) = Rational(inv(i, j) * det_abs).get_num();

  // Gray-code walk over t in {0,1}^n, tracking adj t mod |det|
  std::vector<Integer> acc(n, 0);
  std::vector<LaminationPartition> out;
  const std::uint64_t total = std::uint64_t(1) << n;
  std::uint64_t t = 0;
  for (std::uint64_t step = 1; step < total; ++step) {
    const unsigned bit = static_cast<unsigned>(__builtin_ctzll(step));
    const bool on = !((t >> bit) & 1);
    t ^= std::uint64_t(1) << bit;
    for (std::size_t j = 0; j < n; ++j) {
      if (on) acc[j] += adj(j, bit);
      else acc[j] -= adj(j, bit);
    }
    bool integral = true;
    for (std::size_t j = 0; j < n && integral; ++j) integral = mpz_divisible_p(acc[j].get_mpz_t(), det_abs.get_mpz_t());
    if (!integral) continue;
    IntVec a(n);
    for (std::size_t j = 0; j < n; ++j) a[j] = acc[j] / det_abs;
    if (auto p = partition_for(vertices, s0, std::move(a))) out.push_back(std::move(*p));
  }
  sort_partitions(out);
  return out;
}

std::vector<LaminationPartition> two_laminations_cvp(const PointSet& vertices, bool exact) {
  const std::size_t n = vertices.dim();
  if (vertices.empty()) throw PreconditionError("empty vertex set");
  std::vector<std::int32_t> flat = flatten(vertices);
  if (!spans_mod_p(flat.data(), vertices.size(), n)) full_frame(vertices);
  if (n == 0) return {};
  if (!exact)
    if (auto f = laminations_filtered(flat.data(), vertices.size(), n)) {
      std::vector<LaminationPartition> out;
      for (auto& a : *f) {
        IntVec av(a.begin(), a.end());
        auto p = partition_for(vertices, 0, std::move(av));
        if (!p) throw IntegrityError("filtered functional is not a 2-lamination");
        out.push_back(std::move(*p));
      }
      sort_partitions(out);
      return out;
    }
  return laminations_exact(vertices);
}

namespace {

std::vector<LaminationPartition> laminations_exact(const PointSet& vertices) {
  const std::size_t n = vertices.dim();
  IntMatrix c(n, n);
  IntVec s(n);
  IntVec dv(n);
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    for (std::size_t i = 0; i < n; ++i) dv[i] = static_cast<long>(vertices[v][i]) - vertices[0][i];
    for (std::size_t i = 0; i < n; ++i) {
      if (dv[i] == 0) continue;
      s[i] += dv[i];
      for (std::size_t j = 0; j < n; ++j) c(i, j) += dv[i] * dv[j];
    }
  }
  RatMatrix cq = to_rational(c);
  // sum (a.d - 1/2)^2 = (a - x)^T C (a - x) - x^T C x + N/4 with C x = s / 2
  RatVec half(n);
  for (std::size_t i = 0; i < n; ++i) half[i] = make_rational(s[i], 2);
  RatVec x = solve_left(cq, half);
  Rational floor_value = bilinear(x, cq, x);
  Enumerator en(cq);
  ClosestPoints cp = en.closest(x);
  if (cp.dist_sq != floor_value) throw IntegrityError("lamination quadratic minimum is not attained at zero");
  std::vector<LaminationPartition> out;
  for (std::size_t k = 0; k < cp.points.size(); ++k) {
    IntVec a = cp.points.to_int_vec(k);
    if (std::all_of(a.begin(), a.end(), [](const Integer& z) { return z == 0; })) continue;
    auto p = partition_for(vertices, 0, std::move(a));
    if (!p) throw IntegrityError("closest functional is not a 2-lamination");
    out.push_back(std::move(*p));
  }
  sort_partitions(out);
  return out;
}

}  // namespace

WidthUpperBound lamination_number_upper(const DelaunayCell& cell, const RatMatrix& gram, const Rational& bound,
                                        unsigned threads) {
  const std::size_t n = gram.rows();
  WidthUpperBound out;
  if (cell.vertices.dim() != n) throw PreconditionError("cell and Gram dimensions differ");
  Enumerator dual(inverse(gram));
  BallPoints ball = dual.ball(RatVec(n), bound, threads);
  const std::vector<std::int32_t> flat = flatten(cell.vertices);
  const std::size_t count = cell.vertices.size();
  std::vector<std::int64_t> small(n);
  for (std::size_t k = 0; k < ball.points.size(); ++k) {
    IntVec a = ball.points.to_int_vec(k);
    auto nz = std::find_if(a.begin(), a.end(), [](const Integer& z) { return z != 0; });
    if (nz == a.end() || *nz < 0 || gcd_entries(a) != 1) continue;
    Integer lo, hi;
    bool fast = n <= 256;
    for (std::size_t i = 0; i < n && fast; ++i) {
      fast = a[i].fits_slong_p() && abs(a[i]) < (Integer(1) << 24);
      if (fast) small[i] = a[i].get_si();
    }
    if (fast) {
      // |a_i| < 2^24 and |v_i| < 2^31 keep every partial sum within int64 for n <= 256
      std::int64_t l = 0, h = 0;
      for (std::size_t v = 0; v < count; ++v) {
        std::int64_t z = 0;
        for (std::size_t i = 0; i < n; ++i) z += small[i] * flat[v * n + i];
        if (v == 0 || z < l) l = z;
        if (v == 0 || z > h) h = z;
      }
      lo = static_cast<long>(l);
      hi = static_cast<long>(h);
    } else {
      lo = hi = value_at(a, cell.vertices[0]);
      for (std::size_t v = 1; v < count; ++v) {
        Integer z = value_at(a, cell.vertices[v]);
        if (z < lo) lo = z;
        if (z > hi) hi = z;
      }
    }
    auto laminae = static_cast<std::size_t>(Integer(hi - lo + 1).get_ui());
    if (out.laminae == 0 || laminae < out.laminae) {
      out.laminae = laminae;
      out.witness = std::move(a);
    }
  }
  if (cell.vertices.size() >= 2) out.lower = 2;
  if (cell.full_dimensional && n > 0 && two_laminations_cvp(cell.vertices).empty()) out.lower = 3;
  out.exact = out.laminae != 0 && out.laminae == out.lower;
  return out;
}

namespace {

struct SublatticeOutcome {
  std::uint64_t laminations = 0;
  bool failed = false;
  std::string reason;
  IntVec lamination;
};

// Primitive integer normal of the affine hull of rows frame[0..n-1] of pts.
IntVec hull_normal(const std::int32_t* pts, std::size_t n, const AffineFrame& frame) {
  RatMatrix m(n - 1, n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = static_cast<long>(pts[frame.basis[i + 1] * n + j]) - pts[frame.basis[0] * n + j];
  IntMatrix k = kernel_rational(m).basis;
  if (k.rows() != 1) throw IntegrityError("hyperplane normal is not unique");
  IntVec h(n);
  for (std::size_t j = 0; j < n; ++j) h[j] = k(0, j);
  return h;
}

// Parity class x (sublattice coordinates, relative to its first point) whose
// affine hull is a hyperplane {h = 0}. Its 2-laminations form families
// c + k h; for each c only finitely many k can squeeze the other class
// (doubled coordinates `twice_other`) into two laminae, and each is checked.
// The one-layer case reduces to the primitive functional g of L constant on
// the class, which must have the parity of f and at least five laminae on D.
void degenerate_class(SublatticeOutcome& out, std::size_t n, const std::vector<std::uint8_t>& f,
                      const std::vector<std::int32_t>& verts, std::size_t count, const std::vector<std::int32_t>& orig,
                      const std::vector<std::int32_t>& local, std::size_t nx,
                      const std::vector<std::int64_t>& twice_other, std::size_t no) {
  PointSet xs(n);
  for (std::size_t v = 0; v < nx; ++v) xs.push_back(std::span<const std::int32_t>(&local[v * n], n));
  AffineFrame frame = affine_frame(xs);
  if (frame.dim + 1 < n) {
    out.failed = true;
    out.reason = "parity class has codimension above one";
    return;
  }

  IntVec g = hull_normal(orig.data(), n, frame);
  bool same_parity = true;
  for (std::size_t i = 0; i < n; ++i) same_parity = same_parity && (mpz_odd_p(g[i].get_mpz_t()) != 0) == (f[i] != 0);
  if (same_parity) {
    Integer lo, hi;
    for (std::size_t v = 0; v < count; ++v) {
      Integer z = value_at(g, std::span<const std::int32_t>(&verts[v * n], n));
      if (v == 0 || z < lo) lo = z;
      if (v == 0 || z > hi) hi = z;
    }
    if (hi - lo < 4) {
      out.failed = true;
      out.reason = "functional constant on a parity class has at most four laminae";
      out.lamination = g;
      return;
    }
  }

  IntVec h = hull_normal(local.data(), n, frame);
  // e with h.e = 1; [ker h; e] is a basis of Z^n
  IntVec e(n);
  Integer acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (h[i] == 0) continue;
    Integer gg, s, t;
    mpz_gcdext(gg.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), acc.get_mpz_t(), h[i].get_mpz_t());
    for (std::size_t j = 0; j < i; ++j) e[j] *= s;
    e[i] = t;
    acc = gg;
  }
  if (acc != 1) throw IntegrityError("hyperplane normal is not primitive");
  IntMatrix kb = lamination_sublattice(h);
  IntMatrix u(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j < n; ++j) u(i, j) = kb(i, j);
  for (std::size_t j = 0; j < n; ++j) u(n - 1, j) = e[j];
  RatMatrix ui = inverse(to_rational(u));

  PointSet xz(n - 1);
  std::vector<std::int32_t> z(n - 1);
  for (std::size_t v = 0; v < nx; ++v) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational w = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (local[v * n + i] != 0) w += ui(i, j) * static_cast<long>(local[v * n + i]);
      if (w.get_den() != 1 || (j + 1 == n && w != 0) || !w.get_num().fits_sint_p())
        throw IntegrityError("class does not lie on its hyperplane lattice");
      if (j + 1 < n) z[j] = static_cast<std::int32_t>(w.get_num().get_si());
    }
    xz.push_back(std::span<const std::int32_t>(z.data(), n - 1));
  }
  // other class in the same basis, doubled
  std::vector<Rational> oz(no * n);
  for (std::size_t v = 0; v < no; ++v)
    for (std::size_t j = 0; j < n; ++j) {
      Rational w = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (twice_other[v * n + i] != 0) w += ui(i, j) * static_cast<long>(twice_other[v * n + i]);
      oz[v * n + j] = w;
    }
  Rational bmin = oz[n - 1], bmax = oz[n - 1];
  std::size_t vmin = 0, vmax = 0;
  for (std::size_t v = 1; v < no; ++v) {
    if (oz[v * n + n - 1] < bmin) bmin = oz[v * n + n - 1], vmin = v;
    if (oz[v * n + n - 1] > bmax) bmax = oz[v * n + n - 1], vmax = v;
  }

  for (const auto& lp : two_laminations_cvp(xz)) {
    ++out.laminations;
    const IntVec& c = lp.functional;
    std::vector<Rational> a(no);
    for (std::size_t v = 0; v < no; ++v) {
      Rational w = 0;
      for (std::size_t j = 0; j + 1 < n; ++j) w += c[j] * oz[v * n + j];
      a[v] = w;
    }
    auto width = [&](const Integer& k) {
      Rational lo, hi;
      for (std::size_t v = 0; v < no; ++v) {
        Rational w = a[v] + k * oz[v * n + n - 1];
        if (v == 0 || w < lo) lo = w;
        if (v == 0 || w > hi) hi = w;
      }
      return Rational(hi - lo);
    };
    Integer kmax = 0;
    if (bmax != bmin) {
      Rational spread = abs(a[vmax] - a[vmin]) + 2;
      Rational q = spread / Rational(bmax - bmin);
      mpz_cdiv_q(kmax.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    }
    for (Integer k = -kmax; k <= kmax; ++k) {
      if (width(k) > 2) continue;
      out.failed = true;
      out.reason = "complementary class spans at most two laminae";
      // functional on sublattice coordinates: Uinv (c, k)
      IntVec lam(n);
      for (std::size_t i = 0; i < n; ++i) {
        Rational w = ui(i, n - 1) * k;
        for (std::size_t j = 0; j + 1 < n; ++j) w += ui(i, j) * c[j];
        lam[i] = w.get_num();
      }
      out.lamination = std::move(lam);
      return;
    }
  }
}

// One index-2 sublattice {w : f.w even}. Sublattice coordinates: y_i = w_i for
// i != p, y_p = (w_p - sum_{f_i = 1, i != p} w_i) / 2, p the last index with f_p = 1.
SublatticeOutcome check_sublattice(const std::vector<std::int32_t>& verts, std::size_t count, std::size_t n,
                                   const std::vector<std::uint8_t>& f, std::vector<std::int32_t> cls[2],
                                   std::vector<std::int64_t>& doubled) {
  SublatticeOutcome out;
  std::size_t p = n;
  for (std::size_t i = 0; i < n; ++i)
    if (f[i]) p = i;
  cls[0].clear();
  cls[1].clear();
  for (std::size_t v = 0; v < count; ++v) {
    const std::int32_t* x = &verts[v * n];
    unsigned parity = 0;
    for (std::size_t i = 0; i < n; ++i) parity ^= f[i] & static_cast<unsigned>(x[i] & 1);
    cls[parity].insert(cls[parity].end(), x, x + n);
  }
  // 2 y(v - base), integral for every v
  auto twice_sub = [&](const std::int32_t* v, const std::int32_t* base, std::int64_t* y) {
    std::int64_t rest = 0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = 2 * (static_cast<std::int64_t>(v[i]) - base[i]);
      if (i != p && f[i]) rest += y[i] / 2;
    }
    y[p] = y[p] / 2 - rest;
  };
  std::vector<std::int32_t> local;
  for (int side = 0; side < 2; ++side) {
    const auto& x = cls[side];
    const auto& other = cls[1 - side];
    const std::size_t nx = x.size() / n, no = other.size() / n;
    if (nx == 0 || no == 0) {
      out.failed = true;
      out.reason = "parity class is not full-dimensional";
      return out;
    }
    local.resize(x.size());
    doubled.resize(n);
    for (std::size_t v = 0; v < nx; ++v) {
      twice_sub(&x[v * n], &x[0], doubled.data());
      for (std::size_t i = 0; i < n; ++i) local[v * n + i] = static_cast<std::int32_t>(doubled[i] / 2);
    }
    bool spans = spans_mod_p(local.data(), nx, n);
    PointSet exact_set(n);
    auto as_pointset = [&] {
      if (exact_set.empty())
        for (std::size_t v = 0; v < nx; ++v) exact_set.push_back(std::span<const std::int32_t>(&local[v * n], n));
      return exact_set;
    };
    if (!spans && affine_frame(as_pointset()).dim != n) {
      std::vector<std::int64_t> twice_other(no * n);
      for (std::size_t v = 0; v < no; ++v) twice_sub(&other[v * n], &x[0], &twice_other[v * n]);
      degenerate_class(out, n, f, verts, count, x, local, nx, twice_other, no);
      if (out.failed) return out;
      continue;
    }
    std::vector<IntVec> lams;
    if (auto fl = laminations_filtered(local.data(), nx, n)) {
      for (auto& a : *fl) lams.emplace_back(a.begin(), a.end());
    } else {
      for (auto& lp : laminations_exact(as_pointset())) lams.push_back(lp.functional);
    }
    for (const auto& lam : lams) {
      ++out.laminations;
      std::vector<std::int64_t> a(n);
      bool small = true;
      for (std::size_t i = 0; i < n; ++i) {
        small = small && lam[i].fits_slong_p() && abs(lam[i]) < (Integer(1) << 30);
        if (small) a[i] = lam[i].get_si();
      }
      if (!small) throw IntegrityError("lamination functional out of range");
      std::int64_t lo = 0, hi = 0;
      for (std::size_t v = 0; v < no; ++v) {
        twice_sub(&other[v * n], &x[0], doubled.data());
        std::int64_t val = 0;
        for (std::size_t i = 0; i < n; ++i) val += a[i] * doubled[i];
        if (v == 0 || val < lo) lo = val;
        if (v == 0 || val > hi) hi = val;
      }
      if (hi - lo <= 2) {
        out.failed = true;
        out.reason = "complementary class spans at most two laminae";
        out.lamination = lam;
        return out;
      }
    }
  }
  return out;
}

}  // namespace

WidthProof width_lower_bound_index2(const DelaunayCell& cell, const std::function<void(std::uint64_t)>& progress,
                                    unsigned threads) {
  const std::size_t n = cell.vertices.dim();
  if (!cell.full_dimensional || n == 0) throw PreconditionError("width schema needs a full-dimensional cell");
  if (n > 40) throw PreconditionError("width schema limited to rank 40");
  if (affine_lattice(cell).index != 1) throw PreconditionError("width schema needs a generating cell (L(D) = L)");
  if (threads == 0) threads = 1;

  const std::vector<std::int32_t> verts = flatten(cell.vertices);
  const std::size_t count = cell.vertices.size();
  const std::uint64_t total = Index2Walker(n).count();

  std::atomic<std::uint64_t> first_fail{std::numeric_limits<std::uint64_t>::max()};
  std::atomic<std::uint64_t> done{0};
  std::mutex mu;
  struct Failure {
    std::uint64_t index;
    std::vector<std::uint8_t> parity;
    SublatticeOutcome outcome;
  };
  std::optional<Failure> failure;
  // per-thread (index, count) for sublattices that had laminations
  std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> lam_counts(threads);
  std::exception_ptr error;

  auto worker = [&](unsigned tid) {
    try {
      Index2Walker walk(n);
      std::vector<std::int32_t> cls[2];
      std::vector<std::int64_t> scratch;
      std::uint64_t reported = 0;
      for (std::uint64_t k = 0; walk.next(); ++k) {
        if (k >= first_fail.load(std::memory_order_relaxed)) break;
        if (k % threads != tid) continue;
        SublatticeOutcome o = check_sublattice(verts, count, n, walk.functional(), cls, scratch);
        if (o.laminations) lam_counts[tid].push_back({k, o.laminations});
        if (o.failed) {
          std::lock_guard<std::mutex> lock(mu);
          if (!failure || k < failure->index) {
            failure = Failure{k, walk.functional(), std::move(o)};
            first_fail.store(k);
          }
        }
        std::uint64_t d = done.fetch_add(1) + 1;
        if (tid == 0 && progress && d / 1024 != reported) {
          reported = d / 1024;
          progress(d);
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!error) error = std::current_exception();
      first_fail.store(0);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  WidthProof proof;
  const std::uint64_t last = failure ? failure->index : total - 1;
  proof.sublattices = last + 1;
  for (const auto& per : lam_counts)
    for (const auto& [k, c] : per)
      if (k <= last) proof.laminations += c;
  if (failure) {
    proof.witness_parity = failure->parity;
    proof.witness_lamination = failure->outcome.lamination;
    proof.reason = failure->outcome.reason;
    return proof;
  }
  proof.success = true;
  return proof;
}

}  // namespace delone
