#include "delone/analysis/design.hpp"

#include <thread>
#include <unordered_map>

#include "delone/simd/kernels.hpp"

namespace delone {

Rational sphere_moment(std::size_t k, std::size_t n) {
  if (n == 0) throw PreconditionError("sphere moment needs n >= 1");
  if (k % 2 == 1) return 0;
  // prod_{i < k/2} (2i + 1) / (n + 2i)
  Rational m = 1;
  for (std::size_t i = 0; i < k / 2; ++i) m *= make_rational(Integer(2 * i + 1), Integer(n + 2 * i));
  return m;
}


PairHistogram pair_histogram(const DelaunayCell& cell, const RatMatrix& gram, unsigned threads) {
  const std::size_t n = gram.rows();
  const std::size_t count = cell.vertices.size();
  if (count == 0 || cell.vertices.dim() != n || cell.center.size() != n)
    throw PreconditionError("pair histogram: cell and Gram dimensions differ");

  Integer gd = 1;
  for (const auto& e : gram.data()) gd = lcm(gd, Integer(e.get_den()));
  IntMatrix gi(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gi(i, j) = Rational(gram(i, j) * gd).get_num();
  Integer den = lcm_denominators(cell.center);
  IntVec c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = Rational(cell.center[i] * den).get_num();

  // u = den v - C and w = Gi u; <u_x, w_y> is the scaled inner product
  IntMatrix u(count, n), w(count, n);
  const Integer lim = Integer(1) << 23;
  bool narrow = n < (1u << 14);
  for (std::size_t v = 0; v < count; ++v) {
    for (std::size_t i = 0; i < n; ++i) {
      u(v, i) = den * static_cast<long>(cell.vertices[v][i]) - c[i];
      narrow = narrow && abs(u(v, i)) < lim;
    }
  }
  for (std::size_t v = 0; v < count; ++v)
    for (std::size_t i = 0; i < n; ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < n; ++j) s += gi(i, j) * u(v, j);
      w(v, i) = s;
      narrow = narrow && abs(s) < lim;
    }

  PairHistogram h;
  h.scale = den * den * gd;
  h.size = count;
  for (std::size_t i = 0; i < n; ++i) h.norm += u(0, i) * w(0, i);
  h.dim = cell.affine_dim;

  threads = std::max(1u, threads);
  std::vector<std::map<Integer, Integer>> partial(threads);

  if (narrow) {
    std::vector<std::int32_t> u32(count * n), w32(count * n);
    for (std::size_t v = 0; v < count; ++v)
      for (std::size_t i = 0; i < n; ++i) {
        u32[v * n + i] = static_cast<std::int32_t>(u(v, i).get_si());
        w32[v * n + i] = static_cast<std::int32_t>(w(v, i).get_si());
      }
    const auto& kern = simd::active_kernels();
    auto work = [&](unsigned t) {
      std::unordered_map<std::int64_t, std::uint64_t> tally;
      std::vector<std::int64_t> out(count);
      for (std::size_t x = t; x < count; x += threads) {
        // pairs (x, y) with y >= x; off-diagonal pairs count twice
        std::size_t rest = count - x;
        kern.gemv_i32(u32.data() + x * n, rest, n, w32.data() + x * n, n, out.data());
        tally[out[0]] += 1;
        for (std::size_t k = 1; k < rest; ++k) tally[out[k]] += 2;
      }
      for (const auto& [value, num] : tally) partial[t][Integer(static_cast<long>(value))] += Integer(static_cast<unsigned long>(num));
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
    work(0);
    for (auto& th : pool) th.join();
  } else {
    auto work = [&](unsigned t) {
      for (std::size_t x = t; x < count; x += threads)
        for (std::size_t y = x; y < count; ++y) {
          Integer s = 0;
          for (std::size_t i = 0; i < n; ++i) s += u(y, i) * w(x, i);
          partial[t][s] += x == y ? 1 : 2;
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
    work(0);
    for (auto& th : pool) th.join();
  }
  for (const auto& p : partial)
    for (const auto& [value, num] : p) h.counts[value] += num;
  return h;
}

std::size_t design_strength(const PairHistogram& h, std::size_t t_max) {
  if (h.dim == 0) return t_max;
  const Integer n2 = Integer(static_cast<unsigned long>(h.size)) * static_cast<unsigned long>(h.size);
  Integer rk = 1;  // scaled r^{2k}
  for (std::size_t k = 1; k <= t_max; ++k) {
    rk *= h.norm;
    Integer lhs = 0;
    for (const auto& [value, num] : h.counts) {
      Integer p;
      mpz_pow_ui(p.get_mpz_t(), value.get_mpz_t(), k);
      lhs += p * num;
    }
    if (Rational(lhs) != Rational(n2 * rk) * sphere_moment(k, h.dim)) return k - 1;
  }
  return t_max;
}

std::size_t design_strength(const DelaunayCell& cell, const RatMatrix& gram, std::size_t t_max, unsigned threads) {
  return design_strength(pair_histogram(cell, gram, threads), t_max);
}

}  // namespace delone
