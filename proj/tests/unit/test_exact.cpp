#include <doctest.h>

#include <random>

#include "delone/exact/lll.hpp"
#include "delone/exact/normal_form.hpp"
#include "delone/exact/rank.hpp"
#include "delone/exact/rational.hpp"
#include "oracles.hpp"

using namespace delone;

TEST_CASE("rational parsing and rounding") {
  CHECK(parse_rational("6/-4") == Rational(-3, 2));
  CHECK(parse_rational(" 7 ") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK(floor(Rational(-3, 2)) == -2);
  CHECK(ceil(Rational(-3, 2)) == -1);
  CHECK(round_nearest(Rational(-1, 2)) == 0);
  CHECK(round_nearest(Rational(5, 2)) == 3);
  Rational r;
  CHECK(is_square(Rational(9, 4), &r));
  CHECK(r == Rational(3, 2));
  CHECK_FALSE(is_square(Rational(2)));
  CHECK(isqrt(Integer(99)) == 9);
}

TEST_CASE("hnf") {
  SUBCASE("identity") {
    auto h = hnf(IntMatrix::identity(2));
    CHECK(h.h == IntMatrix::identity(2));
  }
  SUBCASE("diagonal 2I has index 4") {
    IntMatrix m{{2, 0}, {0, 2}};
    auto h = hnf(m);
    CHECK(h.h == m);
    CHECK(abs(determinant(h.h)) == 4);
  }
  SUBCASE("[[1,2],[3,4]]") {
    IntMatrix m{{1, 2}, {3, 4}};
    auto h = hnf(m);
    CHECK(abs(oracle::det2(h.h)) == 2);
    CHECK(abs(oracle::det2(h.u)) == 1);
    CHECK(h.u * m == h.h);
    // mutual integral solvability of the row spaces
    RowSolver from_h(to_rational(h.h)), from_m(to_rational(m));
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(from_h.solve_integral(to_rational(m.row_vec(i))).has_value());
      CHECK(from_m.solve_integral(to_rational(h.h.row_vec(i))).has_value());
    }
  }
  SUBCASE("zero matrix") {
    IntMatrix z(2, 3);
    auto h = hnf(z);
    CHECK(h.rank == 0);
    CHECK(h.h.is_zero());
  }
  SUBCASE("random matrices: unimodular transform, echelon shape") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int trial = 0; trial < 30; ++trial) {
      IntMatrix m(4, 5);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 5; ++j) m(i, j) = d(rng);
      auto h = hnf(m);
      CHECK(abs(determinant(h.u)) == 1);
      CHECK(h.u * m == h.h);
      std::size_t last = 0;
      for (std::size_t i = 0; i < h.rank; ++i) {
        std::size_t c = 0;
        while (h.h(i, c) == 0) ++c;
        if (i > 0) CHECK(c > last);
        last = c;
        CHECK(h.h(i, c) > 0);
        for (std::size_t k = 0; k < i; ++k) {
          CHECK(h.h(k, c) >= 0);
          CHECK(h.h(k, c) < h.h(i, c));
        }
      }
    }
  }
}

TEST_CASE("smith form") {
  IntMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  auto s = smith(m);
  CHECK(s.u * m * s.v == s.s);
  CHECK(abs(determinant(s.u)) == 1);
  CHECK(abs(determinant(s.v)) == 1);
  REQUIRE(s.diagonal.size() == 3);
  CHECK(s.diagonal[0] == 2);
  CHECK(s.diagonal[1] == 6);
  CHECK(s.diagonal[2] == 12);
}

TEST_CASE("kernel_rational") {
  SUBCASE("[1,1]") {
    auto k = kernel_rational(RatMatrix{{1, 1}});
    REQUIRE(k.basis.rows() == 1);
    auto v = k.basis.row_vec(0);
    CHECK(((v[0] == 1 && v[1] == -1) || (v[0] == -1 && v[1] == 1)));
  }
  SUBCASE("identity") { CHECK(kernel_rational(RatMatrix::identity(3)).basis.rows() == 0); }
  SUBCASE("zero gives the full lattice") { CHECK(abs(determinant(kernel_rational(RatMatrix(1, 3)).basis)) == 1); }
  SUBCASE("[2,4,6] is saturated") {
    auto k = kernel_rational(RatMatrix{{2, 4, 6}});
    REQUIRE(k.basis.rows() == 2);
    RowSolver solver(to_rational(k.basis));
    // every small integer kernel vector is an integral combination
    for (int a = -4; a <= 4; ++a)
      for (int b = -4; b <= 4; ++b)
        for (int c = -4; c <= 4; ++c)
          if (2 * a + 4 * b + 6 * c == 0) CHECK(solver.solve_integral(RatVec{a, b, c}).has_value());
    CHECK(solver.solve_integral(RatVec{2, -1, 0}).has_value());
    CHECK(solver.solve_integral(RatVec{3, 0, -1}).has_value());
    for (std::size_t i = 0; i < 2; ++i) CHECK(gcd_entries(k.basis.row_vec(i)) == 1);
    auto ed = elementary_divisors(k.basis);
    for (const auto& e : ed) CHECK(e == 1);
    // coordinate map
    IntVec x{Integer(5), Integer(-1), Integer(-1)};
    IntVec c = row_times(x, k.coordinates);
    CHECK(row_times(c, k.basis) == x);
  }
}

TEST_CASE("rank_exact") {
  CHECK(rank_exact(RatMatrix(3, 3)) == 0);
  for (std::size_t n = 1; n <= 5; ++n) CHECK(rank_exact(RatMatrix::identity(n)) == n);

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rows = 6, cols = 4;
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = make_rational(num(rng), den(rng));
    // force low rank sometimes
    if (trial % 3 == 0)
      for (std::size_t i = 2; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = m(0, j) * Rational(int(i)) - m(1, j) / 3;
    std::vector<std::vector<Rational>> copy;
    for (std::size_t i = 0; i < rows; ++i) copy.push_back(m.row_vec(i));
    auto cert = certified_rank(m);
    CHECK(cert.rank == oracle::ff_rank(copy));
    CHECK(cert.rank == rank_exact(m.transpose()));
    CHECK(cert.kernel.rows() == cols - cert.rank);
    for (std::size_t v = 0; v < cert.kernel.rows(); ++v) {
      RatVec mv = times_col(m, cert.kernel.row_vec(v));
      for (const auto& q : mv) CHECK(q == 0);
    }
  }
}

TEST_CASE("rank with large entries needs several primes") {
  // entries around 2^80 so a single prime cannot reconstruct the kernel
  Integer big = Integer(1) << 80;
  RatMatrix m{{Rational(big + 1), Rational(big), Rational(1)}, {Rational(big), Rational(big - 1), Rational(3)}};
  auto cert = certified_rank(m);
  CHECK(cert.rank == 2);
  REQUIRE(cert.kernel.rows() == 1);
  for (const auto& q : times_col(m, cert.kernel.row_vec(0))) CHECK(q == 0);
}

TEST_CASE("rational reconstruction") {
  Integer m = 1000003;
  Rational out;
  // 3/7 mod m
  Integer inv7;
  mpz_invert(inv7.get_mpz_t(), Integer(7).get_mpz_t(), m.get_mpz_t());
  Integer a = (3 * inv7) % m;
  REQUIRE(rational_reconstruction(a, m, &out));
  CHECK(out == Rational(3, 7));
  REQUIRE(rational_reconstruction(m - 5, m, &out));
  CHECK(out == -5);
}

TEST_CASE("lll_reduce") {
  SUBCASE("identity unchanged") {
    auto r = lll_reduce(RatMatrix::identity(3));
    CHECK(r.gram == RatMatrix::identity(3));
    CHECK(r.transform == IntMatrix::identity(3));
  }
  SUBCASE("[[4,2],[2,4]] keeps determinant 12") {
    RatMatrix g{{4, 2}, {2, 4}};
    auto r = lll_reduce(g);
    CHECK(determinant(r.gram) == 12);
    CHECK(to_rational(r.transform).transpose() * g * to_rational(r.transform) == r.gram);
  }
  SUBCASE("skew basis of Z^2") {
    RatMatrix g{{5, 7}, {7, 10}};
    // exhaustive oracle: the minimum of trace(T^T G T) over unimodular T with |entries| <= 10
    Rational best = -1;
    RatMatrix best_gram;
    for (int a = -10; a <= 10; ++a)
      for (int b = -10; b <= 10; ++b)
        for (int c = -10; c <= 10; ++c)
          for (int d = -10; d <= 10; ++d) {
            if (std::abs(a * d - b * c) != 1) continue;
            RatMatrix t{{a, b}, {c, d}};
            RatMatrix h = t.transpose() * g * t;
            if (best < 0 || h(0, 0) + h(1, 1) < best) {
              best = h(0, 0) + h(1, 1);
              best_gram = h;
            }
          }
    REQUIRE(best_gram == RatMatrix::identity(2));
    auto r = lll_reduce(g);
    CHECK(r.gram == best_gram);
    CHECK(abs(determinant(r.transform)) == 1);
  }
  SUBCASE("not positive definite") {
    CHECK_THROWS_AS(lll_reduce(RatMatrix{{1, 2}, {2, 1}}), PreconditionError);
    CHECK_THROWS_AS(lll_reduce(RatMatrix{{0, 0}, {0, 1}}), PreconditionError);
  }
  SUBCASE("random Grams: determinant and Lovasz condition") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int trial = 0; trial < 20; ++trial) {
      RatMatrix b(5, 5);
      for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) b(i, j) = d(rng);
      if (determinant(b) == 0) continue;
      RatMatrix g = b * b.transpose();
      auto r = lll_reduce(g);
      CHECK(determinant(r.gram) == determinant(g));
      CHECK(to_rational(r.transform).transpose() * g * to_rational(r.transform) == r.gram);
      RatMatrix rr;
      RatVec dd;
      REQUIRE(ldl_upper(r.gram, &rr, &dd));
      for (std::size_t k = 1; k < 5; ++k) {
        for (std::size_t j = 0; j < k; ++j) CHECK(abs(rr(j, k)) * 2 <= 1);
        CHECK(dd[k] >= (Rational(3, 4) - rr(k - 1, k) * rr(k - 1, k)) * dd[k - 1]);
      }
    }
  }
}
