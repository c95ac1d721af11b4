#include "delone/geometry/polytope.hpp"

#include <algorithm>
#include <bit>

#include "delone/exact/rank.hpp"

namespace delone {

namespace {

using Bits = std::vector<std::uint64_t>;

bool subset(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if ((a[i] & ~b[i]) != 0) return false;
  return true;
}

std::size_t popcount(const Bits& a) {
  std::size_t c = 0;
  for (auto w : a) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

struct Ray {
  IntVec x;  // (beta, a): a . v <= beta
  Bits zero;
};

void make_primitive(IntVec& x) {
  Integer g = gcd_entries(x);
  if (g > 1)
    for (auto& e : x) e /= g;
}

Integer eval(const IntVec& x, std::span<const std::int32_t> v) {
  Integer s = x[0];
  for (std::size_t j = 0; j < v.size(); ++j) s -= x[j + 1] * static_cast<long>(v[j]);
  return s;
}

}  // namespace

std::vector<Facet> facets(const PointSet& vertices) {
  const std::size_t n = vertices.dim();
  const std::size_t count = vertices.size();
  if (count < n + 1) throw PreconditionError("polytope is not full-dimensional");
  const std::size_t words = (count + 63) / 64;

  // initial simplex: first affinely independent subset
  IntMatrix diff(count - 1, n);
  for (std::size_t i = 1; i < count; ++i)
    for (std::size_t j = 0; j < n; ++j) diff(i - 1, j) = vertices[i][j] - static_cast<long>(vertices[0][j]);
  ModularProfile prof = modular_profile(diff, modular_prime(0));
  for (std::size_t k = 1; prof.rank < n && k < 4; ++k) prof = modular_profile(diff, modular_prime(k));
  if (prof.rank < n && certified_rank(to_rational(diff)).rank < n)
    throw PreconditionError("polytope is not full-dimensional");
  std::vector<std::size_t> base{0};
  for (auto r : prof.pivot_rows) base.push_back(r + 1);
  std::sort(base.begin(), base.end());

  RatMatrix h0(n + 1, n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    h0(i, 0) = 1;
    for (std::size_t j = 0; j < n; ++j) h0(i, j + 1) = -vertices[base[i]][j];
  }
  RatMatrix inv = inverse(h0);
  std::vector<Ray> rays;
  for (std::size_t c = 0; c <= n; ++c) {
    Ray r;
    RatVec col = inv.col_vec(c);
    Integer d = lcm_denominators(col);
    for (const auto& q : col) r.x.push_back(Rational(q * d).get_num());
    make_primitive(r.x);
    r.zero.assign(words, 0);
    for (std::size_t i = 0; i <= n; ++i)
      if (i != c) r.zero[base[i] / 64] |= std::uint64_t{1} << (base[i] % 64);
    rays.push_back(std::move(r));
  }

  std::vector<bool> done(count, false);
  for (auto b : base) done[b] = true;
  for (std::size_t h = 0; h < count; ++h) {
    if (done[h]) continue;
    done[h] = true;
    std::vector<Integer> s(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      s[r] = eval(rays[r].x, vertices[h]);
      if (s[r] > 0) pos.push_back(r);
      else if (s[r] < 0) neg.push_back(r);
    }
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (s[r] < 0) continue;
      Ray kept = rays[r];
      if (s[r] == 0) kept.zero[h / 64] |= std::uint64_t{1} << (h % 64);
      next.push_back(std::move(kept));
    }
    for (auto p : pos) {
      for (auto q : neg) {
        Bits common(words);
        for (std::size_t w = 0; w < words; ++w) common[w] = rays[p].zero[w] & rays[q].zero[w];
        if (popcount(common) + 1 < n) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != q && subset(common, rays[r].zero)) adjacent = false;
        if (!adjacent) continue;
        Ray nr;
        nr.x.resize(n + 1);
        for (std::size_t j = 0; j <= n; ++j) nr.x[j] = s[p] * rays[q].x[j] - s[q] * rays[p].x[j];
        make_primitive(nr.x);
        nr.zero = common;
        nr.zero[h / 64] |= std::uint64_t{1} << (h % 64);
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
  }

  std::vector<Facet> out;
  for (const auto& r : rays) {
    Facet f;
    f.offset = r.x[0];
    f.normal.assign(r.x.begin() + 1, r.x.end());
    for (std::size_t i = 0; i < count; ++i)
      if ((r.zero[i / 64] >> (i % 64)) & 1) f.vertices.push_back(i);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const Facet& a, const Facet& b) { return a.vertices < b.vertices; });
  return out;
}

}  // namespace delone
