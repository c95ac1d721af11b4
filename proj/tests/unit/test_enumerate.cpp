#include <doctest.h>

#include <random>

#include "delone/geometry/enumerate.hpp"
#include "oracles.hpp"

using namespace delone;

namespace {

RatMatrix a2() { return RatMatrix{{2, 1}, {1, 2}}; }

}  // namespace

TEST_CASE("shortest vectors of small lattices") {
  auto z2 = Enumerator(RatMatrix::identity(2)).shortest();
  CHECK(z2.dist_sq == 1);
  CHECK(z2.points.size() == 4);
  auto a = Enumerator(a2()).shortest();
  CHECK(a.dist_sq == 2);
  CHECK(a.points.size() == 6);
  // closed under negation
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    std::vector<std::int32_t> neg(a.points[i].begin(), a.points[i].end());
    for (auto& c : neg) c = -c;
    CHECK(a.points.contains(neg));
  }
}

TEST_CASE("vectors of norm") {
  CHECK(Enumerator(RatMatrix::identity(2)).of_norm(2).size() == 4);
  CHECK(Enumerator(RatMatrix::identity(3)).of_norm(3).size() == 8);
  CHECK(Enumerator(RatMatrix::identity(2)).of_norm(3).size() == 0);
}

TEST_CASE("closest vectors") {
  SUBCASE("Z^2 at (1/2,1/2)") {
    auto c = Enumerator(RatMatrix::identity(2)).closest({Rational(1, 2), Rational(1, 2)});
    CHECK(c.dist_sq == Rational(1, 2));
    CHECK(c.points.size() == 4);
  }
  SUBCASE("A2 barycenter") {
    RatVec x{Rational(1, 3), Rational(1, 3)};
    auto c = Enumerator(a2()).closest(x);
    auto o = oracle::box_closest(a2(), x, 2);
    CHECK(c.dist_sq == o.first);
    CHECK(c.points.size() == 3);
    CHECK(o.second.size() == 3);
  }
  SUBCASE("ambient wrapper rejects points off the span") {
    Lattice l(RatMatrix{{1, 0, 0}, {0, 1, 0}});
    CHECK_THROWS_AS(closest_vectors(l, {Rational(1, 2), 0, 1}), PreconditionError);
    CHECK(closest_vectors(l, {Rational(1, 2), 0, 0}).points.size() == 2);
  }
}

TEST_CASE("closest vectors agree with box search on random rank-3 lattices") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> e(-5, 5), num(-12, 12), den(1, 6);
  int trials = 0;
  while (trials < 120) {
    RatMatrix b(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) b(i, j) = e(rng);
    if (determinant(b) == 0) continue;
    RatMatrix g = b * b.transpose();
    RatVec x{make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
    Enumerator en(g);
    auto c = en.closest(x);
    // the box must contain every minimizer: |y - x|_inf <= sqrt(d (G^-1)_ii)
    RatMatrix gi = inverse(g);
    double reach = 0;
    for (std::size_t i = 0; i < 3; ++i)
      reach = std::max(reach, std::fabs(x[i].get_d()) + std::sqrt(c.dist_sq.get_d() * gi(i, i).get_d()));
    int r = static_cast<int>(reach) + 1;
    if (r > 14) continue;
    auto o = oracle::box_closest(g, x, r);
    CHECK(c.dist_sq == o.first);
    REQUIRE(c.points.size() == o.second.size());
    for (const auto& p : o.second) CHECK(c.points.contains(std::vector<std::int32_t>(p.begin(), p.end())));
    // ball count against the box
    Rational bound = c.dist_sq + 3;
    double reach2 = 0;
    for (std::size_t i = 0; i < 3; ++i)
      reach2 = std::max(reach2, std::fabs(x[i].get_d()) + std::sqrt(bound.get_d() * gi(i, i).get_d()));
    int r2 = static_cast<int>(reach2) + 1;
    if (r2 <= 14) CHECK(en.ball(x, bound).points.size() == oracle::box_count(g, x, bound, r2));
    ++trials;
  }
}

TEST_CASE("wide arithmetic backends give the same answers") {
  RatMatrix g{{5, 2, 1}, {2, 6, -1}, {1, -1, 7}};
  RatVec x{Rational(1, 3), Rational(-2, 7), Rational(5, 11)};
  Enumerator small(g);
  auto base = small.ball(x, 20);
  CHECK(Enumerator::last_arithmetic() == 0);
  auto base_close = small.closest(x);
  for (int shift : {50, 130}) {
    RatMatrix gs = g;
    gs *= Rational(Integer(1) << shift);
    Enumerator big(gs);
    auto b = big.ball(x, Rational(20) * Rational(Integer(1) << shift));
    CHECK(Enumerator::last_arithmetic() == (shift == 50 ? 1 : 2));
    CHECK(b.points == base.points);
    auto c = big.closest(x);
    CHECK(c.points == base_close.points);
    CHECK(c.dist_sq == base_close.dist_sq * Rational(Integer(1) << shift));
  }
}

TEST_CASE("threaded enumeration is deterministic") {
  RatMatrix g{{4, 1, 0, 1}, {1, 4, 1, 0}, {0, 1, 4, 1}, {1, 0, 1, 4}};
  Enumerator en(g);
  RatVec x{Rational(1, 2), Rational(1, 3), 0, Rational(1, 5)};
  auto one = en.ball(x, 12, 1);
  auto four = en.ball(x, 12, 4);
  CHECK(one.points == four.points);
  CHECK(one.dist_sq == four.dist_sq);
  auto c1 = en.closest(x, 1), c4 = en.closest(x, 3);
  CHECK(c1.points == c4.points);
  CHECK(c1.dist_sq == c4.dist_sq);
}
