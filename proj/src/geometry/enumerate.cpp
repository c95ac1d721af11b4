#include "delone/geometry/enumerate.hpp"

#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

namespace delone {

namespace {

std::atomic<int> g_last_arithmetic{0};

using i128 = __int128;

// Integer helpers for the three arithmetic backends; divisors are positive.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) { return a / b - ((a % b != 0) && (a < 0)); }
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return a / b + ((a % b != 0) && (a > 0)); }
inline i128 floor_div(i128 a, i128 b) { return a / b - ((a % b != 0) && (a < 0)); }
inline i128 ceil_div(i128 a, i128 b) { return a / b + ((a % b != 0) && (a > 0)); }
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline std::int64_t int_sqrt(std::int64_t v) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}
inline i128 int_sqrt(i128 v) {
  auto r = static_cast<i128>(std::sqrt(static_cast<long double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}
inline Integer int_sqrt(const Integer& v) { return isqrt(v); }

template <class T>
T convert(const Integer& z);
template <>
std::int64_t convert<std::int64_t>(const Integer& z) {
  return to_int64(z);
}
template <>
i128 convert<i128>(const Integer& z) {
  // two 64-bit halves
  Integer a = abs(z);
  Integer hi = a >> 64;
  Integer lo = a - (hi << 64);
  i128 v = (static_cast<i128>(mpz_get_ui(hi.get_mpz_t())) << 64) | static_cast<i128>(mpz_get_ui(lo.get_mpz_t()));
  return z < 0 ? -v : v;
}
template <>
Integer convert<Integer>(const Integer& z) {
  return z;
}

inline Integer to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }
inline Integer to_integer(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  Integer hi(static_cast<unsigned long>(u >> 64));
  Integer lo(static_cast<unsigned long>(u & ~std::uint64_t{0}));
  Integer r = (hi << 64) + lo;
  return neg ? Integer(-r) : r;
}
inline const Integer& to_integer(const Integer& v) { return v; }

inline std::int64_t to_i64(std::int64_t v) { return v; }
inline std::int64_t to_i64(i128 v) { return static_cast<std::int64_t>(v); }
inline std::int64_t to_i64(const Integer& v) { return to_int64(v); }

// Integer-scaled query data shared by all backends.
struct Prepared {
  std::size_t n = 0;
  IntVec m, z, w, a;  // a is n x n, strictly upper part used
  Integer b;          // scaled bound
  Integer q;          // distance = S / q
  int arith = 0;
};

template <class T>
struct Tree {
  std::size_t n;
  std::vector<T> m, z, w, a;
  T b;
  bool shrink = false;
  std::vector<T> y;
  // leaves: either streamed to `leaf` or collected
  std::function<void(const T*, const T&)> leaf;
  std::vector<std::int64_t> out_y;
  std::vector<T> out_s;

  explicit Tree(const Prepared& p) : n(p.n), b(convert<T>(p.b)), y(p.n, T(0)) {
    for (std::size_t i = 0; i < n; ++i) {
      m.push_back(convert<T>(p.m[i]));
      z.push_back(convert<T>(p.z[i]));
      w.push_back(convert<T>(p.w[i]));
    }
    for (const auto& x : p.a) a.push_back(convert<T>(x));
  }

  T center_term(std::size_t i) const {
    T c = -z[i];
    for (std::size_t j = i + 1; j < n; ++j) c += a[i * n + j] * y[j];
    return c;
  }

  // inclusive range of y_i with w_i k^2 <= B - S
  bool range(std::size_t i, const T& s, const T& c, T& lo, T& hi) const {
    T rem = b - s;
    if (rem < 0) return false;
    T r = int_sqrt(T(rem / w[i]));
    lo = ceil_div(T(-r - c), m[i]);
    hi = floor_div(T(r - c), m[i]);
    return lo <= hi;
  }

  void emit(const T& s) {
    if (leaf) {
      leaf(y.data(), s);
      return;
    }
    if (shrink) {
      if (s > b) return;
      if (s < b) {
        b = s;
        out_y.clear();
        out_s.clear();
      }
    }
    for (std::size_t i = 0; i < n; ++i) out_y.push_back(to_i64(y[i]));
    out_s.push_back(s);
  }

  void visit_value(std::size_t i, const T& s, const T& c, const T& v) {
    y[i] = v;
    T k = m[i] * v + c;
    T t = s + w[i] * k * k;
    if (i == 0) emit(t);
    else descend(i - 1, t);
  }

  void descend(std::size_t i, const T& s) {
    T c = center_term(i);
    T lo, hi;
    if (!range(i, s, c, lo, hi)) return;
    if (!shrink) {
      for (T v = lo; v <= hi; ++v) visit_value(i, s, c, v);
      return;
    }
    // zigzag outward from the nearest value; each side stops once it leaves the (shrinking) ball
    T mid = floor_div(T(-2 * c + m[i]), T(2 * m[i]));
    if (mid < lo) mid = lo;
    if (mid > hi) mid = hi;
    T up = mid, down = mid - 1;
    bool up_ok = true, down_ok = down >= lo;
    while (up_ok || down_ok) {
      bool take_up;
      if (up_ok && down_ok) {
        T ku = m[i] * up + c, kd = m[i] * down + c;
        take_up = (ku < 0 ? -ku : ku) <= (kd < 0 ? -kd : kd);
      } else {
        take_up = up_ok;
      }
      T v = take_up ? up : down;
      T k = m[i] * v + c;
      if (s + w[i] * k * k > b) {
        (take_up ? up_ok : down_ok) = false;
        continue;
      }
      visit_value(i, s, c, v);
      if (take_up) {
        ++up;
        up_ok = up <= hi;
      } else {
        --down;
        down_ok = down >= lo;
      }
    }
  }

  // top-level values, for sharding
  std::vector<T> top_values() {
    T c = center_term(n - 1);
    T lo, hi;
    std::vector<T> out;
    if (!range(n - 1, T(0), c, lo, hi)) return out;
    for (T v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }

  void run_top(const T& v) {
    T c = center_term(n - 1);
    T k = m[n - 1] * v + c;
    if (shrink && w[n - 1] * k * k > b) return;
    visit_value(n - 1, T(0), c, v);
  }
};

struct RawHits {
  std::vector<std::int64_t> y;  // reduced coordinates, n per hit
  IntVec s;
};

template <class T>
RawHits run_tree(const Prepared& p, bool shrink, unsigned threads) {
  RawHits hits;
  Tree<T> root(p);
  root.shrink = shrink;
  if (p.n == 0) {
    hits.s.push_back(Integer(0));
    return hits;
  }
  std::vector<T> tops = root.top_values();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tops.size())));
  std::vector<Tree<T>> trees(threads, root);
  auto work = [&](unsigned t) {
    for (std::size_t idx = t; idx < tops.size(); idx += threads) trees[t].run_top(tops[idx]);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  T best = root.b;
  if (shrink)
    for (const auto& tr : trees)
      if (!tr.out_s.empty() && tr.out_s.front() < best) best = tr.out_s.front();
  for (const auto& tr : trees) {
    for (std::size_t h = 0; h < tr.out_s.size(); ++h) {
      if (shrink && tr.out_s[h] != best) continue;
      hits.y.insert(hits.y.end(), tr.out_y.begin() + h * p.n, tr.out_y.begin() + (h + 1) * p.n);
      hits.s.push_back(to_integer(tr.out_s[h]));
    }
  }
  return hits;
}

RawHits run(const Prepared& p, bool shrink, unsigned threads) {
  g_last_arithmetic = p.arith;
  switch (p.arith) {
    case 0:
      return run_tree<std::int64_t>(p, shrink, threads);
    case 1:
      return run_tree<i128>(p, shrink, threads);
    default:
      return run_tree<Integer>(p, shrink, threads);
  }
}

double magnitude(const Integer& z) { return std::fabs(z.get_d()); }

}  // namespace

int Enumerator::last_arithmetic() { return g_last_arithmetic; }

Enumerator::Enumerator(const RatMatrix& gram) : gram_(gram), lll_(lll_reduce(gram)) {
  t_ = lll_.transform;
  for (const auto& e : t_.data())
    if (!fits_int64(e)) throw IntegrityError("basis reduction transform exceeds 64 bits");
  tinv_ = inverse(to_rational(t_));
  if (!ldl_upper(lll_.gram, &r_, &d_)) throw PreconditionError("Gram matrix is not positive definite");
  RatMatrix ginv = inverse(lll_.gram);
  for (std::size_t i = 0; i < rank(); ++i) spread_.push_back(std::sqrt(ginv(i, i).get_d()));
}

namespace {

struct Query {
  Prepared p;
  RatVec xr;  // reduced center
};

Query prepare(const RatMatrix& r, const RatVec& d, const std::vector<double>& spread, const RatVec& xr,
              const Rational& bound) {
  Query out;
  out.xr = xr;
  Prepared& p = out.p;
  const std::size_t n = xr.size();
  p.n = n;
  p.m.assign(n, Integer(1));
  p.z.assign(n, Integer(0));
  p.w.assign(n, Integer(0));
  p.a.assign(n * n, Integer(0));
  RatVec zr(n);
  for (std::size_t i = 0; i < n; ++i) {
    zr[i] = xr[i];
    for (std::size_t j = i + 1; j < n; ++j) zr[i] += r(i, j) * xr[j];
    Integer mi = zr[i].get_den();
    for (std::size_t j = i + 1; j < n; ++j) mi = lcm(mi, Integer(r(i, j).get_den()));
    p.m[i] = mi;
    p.z[i] = Rational(zr[i] * mi).get_num();
    for (std::size_t j = i + 1; j < n; ++j) p.a[i * n + j] = Rational(r(i, j) * mi).get_num();
  }
  RatVec wr(n);
  Integer q = bound.get_den();
  for (std::size_t i = 0; i < n; ++i) {
    wr[i] = d[i] / Rational(p.m[i] * p.m[i]);
    q = lcm(q, Integer(wr[i].get_den()));
  }
  p.q = q;
  for (std::size_t i = 0; i < n; ++i) p.w[i] = Rational(wr[i] * q).get_num();
  p.b = floor(bound * q);

  // a priori magnitudes of every quantity the tree touches
  double root = std::sqrt(std::max(0.0, bound.get_d()));
  double mag = magnitude(p.b);
  for (std::size_t i = 0; i < n; ++i) {
    double c = magnitude(p.z[i]);
    for (std::size_t j = i + 1; j < n; ++j)
      c += magnitude(p.a[i * n + j]) * (std::fabs(xr[j].get_d()) + spread[j] * root + 2);
    double k = magnitude(p.m[i]) * (std::fabs(xr[i].get_d()) + spread[i] * root + 2) + c;
    mag = std::max({mag, 2 * c + magnitude(p.m[i]), 2 * k, magnitude(p.w[i]) * k});
  }
  p.arith = mag < 0x1p61 ? 0 : mag < 0x1p124 ? 1 : 2;
  if (bound < 0) p.b = -1;
  return out;
}

}  // namespace

BallPoints Enumerator::ball(const RatVec& center, const Rational& bound, unsigned threads) const {
  if (center.size() != rank()) throw PreconditionError("center has the wrong dimension");
  Query qd = prepare(r_, d_, spread_, row_times(center, tinv_.transpose()), bound);
  BallPoints out;
  out.points = PointSet(rank());
  if (bound < 0) return out;
  RawHits hits = run(qd.p, false, threads);
  const std::size_t n = rank();
  std::vector<std::size_t> order(hits.s.size());
  std::iota(order.begin(), order.end(), 0);
  // map back to original coordinates
  std::vector<std::int32_t> orig(hits.s.size() * n);
  for (std::size_t h = 0; h < hits.s.size(); ++h)
    for (std::size_t i = 0; i < n; ++i) {
      i128 acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += static_cast<i128>(t_(i, j).get_si()) * hits.y[h * n + j];
      if (acc > INT32_MAX || acc < INT32_MIN) throw IntegrityError("coordinate exceeds 32-bit range");
      orig[h * n + i] = static_cast<std::int32_t>(acc);
    }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(orig.begin() + a * n, orig.begin() + (a + 1) * n, orig.begin() + b * n,
                                        orig.begin() + (b + 1) * n);
  });
  out.points.reserve(order.size());
  out.dist_sq.reserve(order.size());
  for (auto h : order) {
    out.points.push_back(std::span<const std::int32_t>(orig.data() + h * n, n));
    out.dist_sq.push_back(make_rational(hits.s[h], qd.p.q));
  }
  return out;
}

void Enumerator::visit(const RatVec& center, const Rational& bound,
                       const std::function<void(std::span<const std::int32_t>, const Rational&)>& fn) const {
  if (center.size() != rank()) throw PreconditionError("center has the wrong dimension");
  if (bound < 0) return;
  Query qd = prepare(r_, d_, spread_, row_times(center, tinv_.transpose()), bound);
  const std::size_t n = rank();
  std::vector<std::int32_t> orig(n);
  auto go = [&](auto tag) {
    using T = decltype(tag);
    Tree<T> tree(qd.p);
    tree.leaf = [&](const T* y, const T& s) {
      for (std::size_t i = 0; i < n; ++i) {
        i128 acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc += static_cast<i128>(t_(i, j).get_si()) * to_i64(y[j]);
        orig[i] = static_cast<std::int32_t>(acc);
      }
      fn(orig, make_rational(to_integer(s), qd.p.q));
    };
    if (n == 0) {
      fn(orig, Rational(0));
      return;
    }
    tree.descend(n - 1, T(0));
  };
  g_last_arithmetic = qd.p.arith;
  if (qd.p.arith == 0) go(std::int64_t{0});
  else if (qd.p.arith == 1) go(i128{0});
  else go(Integer(0));
}

ClosestPoints Enumerator::closest(const RatVec& center, unsigned threads) const {
  if (center.size() != rank()) throw PreconditionError("center has the wrong dimension");
  const std::size_t n = rank();
  RatVec xr = row_times(center, tinv_.transpose());
  // Babai nearest plane gives the starting radius
  RatVec y(n);
  Rational babai = 0;
  for (std::size_t i = n; i-- > 0;) {
    Rational c = xr[i];
    for (std::size_t j = i + 1; j < n; ++j) c += r_(i, j) * (xr[j] - y[j]);
    y[i] = Rational(round_nearest(c));
    Rational u = y[i] - c;
    babai += d_[i] * u * u;
  }
  Query qd = prepare(r_, d_, spread_, xr, babai);
  RawHits hits = run(qd.p, true, threads);
  ClosestPoints out;
  out.points = PointSet(n);
  std::vector<std::int32_t> orig(n);
  for (std::size_t h = 0; h < hits.s.size(); ++h) {
    for (std::size_t i = 0; i < n; ++i) {
      i128 acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += static_cast<i128>(t_(i, j).get_si()) * hits.y[h * n + j];
      if (acc > INT32_MAX || acc < INT32_MIN) throw IntegrityError("coordinate exceeds 32-bit range");
      orig[i] = static_cast<std::int32_t>(acc);
    }
    out.points.push_back(orig);
  }
  out.points.sort_unique();
  out.dist_sq = hits.s.empty() ? babai : make_rational(hits.s.front(), qd.p.q);
  return out;
}

ClosestPoints Enumerator::shortest(unsigned threads) const {
  if (rank() == 0) throw PreconditionError("rank-0 lattice has no nonzero vectors");
  Rational bound = lll_.gram(0, 0);
  for (std::size_t i = 1; i < rank(); ++i) bound = std::min(bound, lll_.gram(i, i));
  BallPoints b = ball(RatVec(rank()), bound, threads);
  ClosestPoints out;
  out.points = PointSet(rank());
  bool have = false;
  for (std::size_t h = 0; h < b.points.size(); ++h) {
    if (b.dist_sq[h] == 0) continue;
    if (!have || b.dist_sq[h] < out.dist_sq) {
      out.dist_sq = b.dist_sq[h];
      have = true;
    }
  }
  for (std::size_t h = 0; h < b.points.size(); ++h)
    if (b.dist_sq[h] == out.dist_sq) out.points.push_back(b.points[h]);
  return out;
}

PointSet Enumerator::of_norm(const Rational& q, unsigned threads) const {
  (void)threads;
  PointSet out(rank());
  if (q <= 0) return out;
  visit(RatVec(rank()), q, [&](std::span<const std::int32_t> y, const Rational& d) {
    if (d == q) out.push_back(y);
  });
  out.sort_unique();
  return out;
}

ClosestPoints shortest_vectors(const Lattice& l, unsigned threads) { return Enumerator(l).shortest(threads); }

PointSet vectors_of_norm(const Lattice& l, const Rational& q, unsigned threads) {
  return Enumerator(l).of_norm(q, threads);
}

ClosestPoints closest_vectors(const Lattice& l, const RatVec& x, unsigned threads) {
  auto c = l.coordinates(x);
  if (!c) throw PreconditionError("point is outside the span of the lattice");
  return Enumerator(l).closest(*c, threads);
}

}  // namespace delone
