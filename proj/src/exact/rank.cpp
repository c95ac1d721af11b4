#include "delone/exact/rank.hpp"

#include <algorithm>
#include <random>

#include "delone/simd/kernels.hpp"

namespace delone {

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

double reduce_mod(const Integer& z, std::uint32_t p) {
  return static_cast<double>(mpz_fdiv_ui(z.get_mpz_t(), p));
}

IntMatrix integer_rows(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer d = lcm_denominators(m.row_vec(i));
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j) * d).get_num();
  }
  return out;
}

// Echelon basis modulo p, rows normalized to a unit pivot, sorted by pivot column.
struct ModularEchelon {
  std::uint32_t p;
  std::size_t cols;
  std::vector<std::vector<double>> rows;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> sources;
};

ModularEchelon modular_echelon(const IntMatrix& m, std::uint32_t p) {
  const auto& kern = simd::active_kernels();
  ModularEchelon e{p, m.cols(), {}, {}, {}};
  const double dp = static_cast<double>(p);
  std::vector<double> x(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (e.rows.size() == m.cols()) break;
    for (std::size_t j = 0; j < m.cols(); ++j) x[j] = reduce_mod(m(i, j), p);
    for (std::size_t k = 0; k < e.rows.size(); ++k) {
      double a = x[e.pivots[k]];
      if (a == 0) continue;
      kern.axpy_mod(x.data(), e.rows[k].data(), dp - a, m.cols(), dp);
    }
    std::size_t f = 0;
    while (f < m.cols() && x[f] == 0) ++f;
    if (f == m.cols()) continue;
    double inv = static_cast<double>(mod_inverse(static_cast<std::uint64_t>(x[f]), p));
    std::vector<double> row(m.cols(), 0.0);
    kern.axpy_mod(row.data(), x.data(), inv, m.cols(), dp);
    auto it = std::lower_bound(e.pivots.begin(), e.pivots.end(), f);
    auto pos = it - e.pivots.begin();
    e.pivots.insert(it, f);
    e.rows.insert(e.rows.begin() + pos, std::move(row));
    e.sources.insert(e.sources.begin() + pos, i);
  }
  return e;
}

// Kernel vectors modulo p, one per free column, normalized to 1 on that column.
std::vector<std::vector<std::uint64_t>> modular_kernel(ModularEchelon e) {
  const auto& kern = simd::active_kernels();
  const double dp = static_cast<double>(e.p);
  const std::size_t r = e.rows.size();
  // back substitution to reduced echelon form
  for (std::size_t k = r; k-- > 0;) {
    for (std::size_t i = 0; i < k; ++i) {
      double a = e.rows[i][e.pivots[k]];
      if (a == 0) continue;
      kern.axpy_mod(e.rows[i].data(), e.rows[k].data(), dp - a, e.cols, dp);
    }
  }
  std::vector<bool> is_pivot(e.cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint64_t>> out;
  for (std::size_t f = 0; f < e.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint64_t> k(e.cols, 0);
    k[f] = 1;
    for (std::size_t i = 0; i < r; ++i) {
      auto a = static_cast<std::uint64_t>(e.rows[i][f]);
      k[e.pivots[i]] = a == 0 ? 0 : e.p - a;
    }
    out.push_back(std::move(k));
  }
  return out;
}

bool kernel_verifies(const IntMatrix& m, const RatVec& k) {
  Integer d = lcm_denominators(k);
  IntVec z(k.size());
  for (std::size_t j = 0; j < k.size(); ++j) z[j] = Rational(k[j] * d).get_num();
  Integer s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (z[j] != 0 && m(i, j) != 0) s += m(i, j) * z[j];
    if (s != 0) return false;
  }
  return true;
}

}  // namespace

std::uint32_t modular_prime(std::size_t index) {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<std::uint32_t> out;
    std::mt19937_64 rng(0x5eedde1a0e5ULL);
    while (out.size() < 256) {
      std::uint32_t c = ((1u << 24) + static_cast<std::uint32_t>(rng() % (1u << 24))) | 1u;
      if (is_prime_u32(c) && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
    return out;
  }();
  if (index >= primes.size()) throw IntegrityError("ran out of modular primes");
  return primes[index];
}

ModularProfile modular_profile(const IntMatrix& m, std::uint32_t p) {
  ModularEchelon e = modular_echelon(m, p);
  ModularProfile out;
  out.prime = p;
  out.rank = e.rows.size();
  out.pivot_cols = e.pivots;
  out.pivot_rows = e.sources;
  return out;
}

bool rational_reconstruction(const Integer& a, const Integer& m, Rational* out) {
  Integer bound = isqrt(m / 2);
  Integer r0 = m, r1;
  mpz_fdiv_r(r1.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  Integer t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return false;
  *out = make_rational(r1, t1);
  return true;
}

std::size_t bareiss_rank(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    a.swap_rows(p, r);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = a(i, j) * a(r, c) - a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

RankCertificate certified_rank(const RatMatrix& m) {
  RankCertificate cert;
  if (m.rows() == 0 || m.cols() == 0) {
    cert.kernel = RatMatrix::identity(m.cols());
    return cert;
  }
  IntMatrix z = integer_rows(m);

  // Two primes with the same (maximal) profile.
  std::vector<ModularEchelon> agreeing;
  std::size_t next = 0;
  while (agreeing.size() < 2) {
    ModularEchelon e = modular_echelon(z, modular_prime(next++));
    if (!agreeing.empty()) {
      const auto& ref = agreeing.front();
      if (e.rows.size() < ref.rows.size() || (e.rows.size() == ref.rows.size() && e.pivots > ref.pivots)) continue;
      if (e.rows.size() > ref.rows.size() || e.pivots < ref.pivots) agreeing.clear();
    }
    agreeing.push_back(std::move(e));
  }
  const std::size_t r = agreeing.front().rows.size();
  const std::vector<std::size_t> pivots = agreeing.front().pivots;
  cert.rank = r;
  for (const auto& e : agreeing) cert.primes.push_back(e.p);
  if (r == m.cols()) {
    cert.kernel = RatMatrix(0, m.cols());
    return cert;
  }

  // CRT-accumulate the normalized modular kernels, then reconstruct and verify exactly.
  std::vector<std::vector<Integer>> residues;
  Integer modulus = 1;
  auto absorb = [&](const ModularEchelon& e) {
    auto ker = modular_kernel(e);
    const Integer p = e.p;
    if (residues.empty()) {
      residues.assign(ker.size(), std::vector<Integer>(m.cols()));
      for (std::size_t v = 0; v < ker.size(); ++v)
        for (std::size_t j = 0; j < m.cols(); ++j) residues[v][j] = static_cast<unsigned long>(ker[v][j]);
      modulus = p;
      return;
    }
    Integer inv;
    mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), p.get_mpz_t());
    for (std::size_t v = 0; v < ker.size(); ++v)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        Integer& x = residues[v][j];
        Integer diff = Integer(static_cast<unsigned long>(ker[v][j])) - x;
        Integer t = diff * inv;
        mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
        x += t * modulus;
      }
    modulus *= p;
  };
  for (const auto& e : agreeing) absorb(e);

  constexpr std::size_t kMaxPrimes = 200;
  while (cert.primes.size() <= kMaxPrimes && next < 250) {
    RatMatrix kernel(residues.size(), m.cols());
    bool ok = true;
    for (std::size_t v = 0; v < residues.size() && ok; ++v) {
      RatVec k(m.cols());
      for (std::size_t j = 0; j < m.cols() && ok; ++j) ok = rational_reconstruction(residues[v][j], modulus, &k[j]);
      if (ok) ok = kernel_verifies(z, k);
      if (ok)
        for (std::size_t j = 0; j < m.cols(); ++j) kernel(v, j) = k[j];
    }
    if (ok) {
      cert.kernel = std::move(kernel);
      return cert;
    }
    ModularEchelon e = modular_echelon(z, modular_prime(next++));
    if (e.rows.size() != r || e.pivots != pivots) continue;  // unlucky prime
    cert.primes.push_back(e.p);
    absorb(e);
  }
  cert.exact_fallback = true;
  cert.rank = bareiss_rank(z);
  cert.kernel = RatMatrix(0, m.cols());
  return cert;
}

std::size_t rank_exact(const RatMatrix& m) { return certified_rank(m).rank; }

}  // namespace delone
