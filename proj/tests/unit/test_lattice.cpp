#include <doctest.h>

#include <sstream>

#include "delone/constructions/leech.hpp"
#include "delone/exact/normal_form.hpp"
#include "delone/geometry/enumerate.hpp"
#include "delone/lattice/catalog.hpp"
#include "delone/lattice/sublattices.hpp"

using namespace delone;

namespace {

IntVec leech_coords(const Lattice& leech, std::vector<int> scaled) {
  RatVec x;
  for (int v : scaled) x.push_back(v);
  auto c = leech.coordinates(x);
  REQUIRE(c.has_value());
  IntVec out;
  for (const auto& q : *c) {
    REQUIRE(q.get_den() == 1);
    out.push_back(q.get_num());
  }
  return out;
}

std::vector<int> pad(std::vector<int> head) {
  head.resize(24, 0);
  return head;
}

bool same_lattice(const Lattice& a, const Lattice& b) {
  for (std::size_t i = 0; i < a.rank(); ++i)
    if (!b.contains(a.basis().row_vec(i))) return false;
  for (std::size_t i = 0; i < b.rank(); ++i)
    if (!a.contains(b.basis().row_vec(i))) return false;
  return true;
}

}  // namespace

TEST_CASE("dual and determinant") {
  Lattice z3(RatMatrix::identity(3));
  CHECK(same_lattice(dual(z3), z3));
  CHECK(determinant(z3).value == 1);
  Lattice a2 = Lattice::from_gram(RatMatrix{{2, 1}, {1, 2}});
  CHECK(dual(a2).squared_determinant() == Rational(1, 3));
  CHECK(determinant(a2).squared);
  CHECK(determinant(a2).value == 3);
  CHECK(dual(dual(a2)).gram() == a2.gram());
  CHECK(a2.squared_determinant() * dual(a2).squared_determinant() == 1);
  CHECK_THROWS_AS(Lattice(RatMatrix{{1, 0}, {2, 0}}), PreconditionError);
}

TEST_CASE("sections and projections in small lattices") {
  Lattice z3(RatMatrix::identity(3));
  auto s = orthogonal_section(z3, {0, 0, 1});
  CHECK(s.rank() == 2);
  CHECK(s.squared_determinant() == 1);
  CHECK_THROWS_AS(orthogonal_section(z3, {0, 0, 2}), PreconditionError);
  CHECK_THROWS_AS(orthogonal_section(z3, {0, 0, 0}), PreconditionError);

  Lattice z2(RatMatrix::identity(2));
  auto p = project_orthogonal(z2, {0, 1});
  CHECK(p.rank() == 1);
  CHECK(p.squared_determinant() == 1);

  // A2 projected away from a minimal vector: generated by half of the orthogonal
  // root, squared determinant 3/2
  Lattice a2 = Lattice::from_gram(RatMatrix{{2, 1}, {1, 2}});
  CHECK(project_orthogonal(a2, {1, 0}).squared_determinant() == Rational(3, 2));

  // for a self-dual lattice the projection is the dual of the section
  Lattice z4(RatMatrix::identity(4));
  IntVec v{1, 2, 0, 1};
  CHECK(same_lattice(project_orthogonal(z4, v), dual(orthogonal_section(z4, v))));
}

TEST_CASE("glue lattices and quotients on Z-forms") {
  Lattice a2 = Lattice::from_gram(RatMatrix{{2, -1}, {-1, 2}});
  CHECK(discriminant_group(a2) == std::vector<Integer>{3});
  CHECK(same_lattice(glue_lattice(a2, 1), a2));
  CHECK(same_lattice(glue_lattice(a2, 3), dual(a2)));
  CHECK_THROWS_AS(glue_lattice(a2, 2), PreconditionError);
  // D4 has discriminant group (Z/2)^2: not cyclic
  CHECK_THROWS_AS(glue_lattice(lattice_dn(4), 2), PreconditionError);
  Lattice a3 = lattice_an(3);
  Lattice g2 = glue_lattice(a3, 2);
  CHECK(g2.squared_determinant() == 1);  // D3 = A3 glued to index 2 inside A3* has det 4/4
  auto pair = make_pair(a3, glue_lattice(a3, 4));
  CHECK(pair.index == 4);
  CHECK(quotient_structure(pair).invariant_factors == std::vector<Integer>{4});
  // monotone in d
  CHECK(make_pair(g2, glue_lattice(a3, 4)).index == 2);
  CHECK(quotient_structure(make_pair(a3, a3)).invariant_factors.empty());
  CHECK_THROWS_AS(make_pair(dual(a3), a3), PreconditionError);
}

TEST_CASE("index-2 sublattices and superlattices") {
  Lattice z1(RatMatrix::identity(1));
  Index2Sublattices s1(z1);
  REQUIRE(s1.next());
  CHECK(s1.current().gram()(0, 0) == 4);
  CHECK_FALSE(s1.next());
  Index2Superlattices p1(z1);
  REQUIRE(p1.next());
  CHECK(p1.current().gram()(0, 0) == Rational(1, 4));
  CHECK_FALSE(p1.next());

  Lattice z2(RatMatrix::identity(2));
  int subs = 0, supers = 0;
  for (Index2Sublattices it(z2); it.next(); ++subs) CHECK(it.current().squared_determinant() == 4);
  for (Index2Superlattices it(z2); it.next(); ++supers) CHECK(it.current().squared_determinant() == Rational(1, 4));
  CHECK(subs == 3);
  CHECK(supers == 3);

  for (std::size_t n = 1; n <= 6; ++n) {
    Index2Walker w(n);
    std::uint64_t count = 0;
    std::vector<std::uint8_t> prev;
    while (w.next()) {
      ++count;
      if (!prev.empty()) CHECK(prev < w.functional());
      prev = w.functional();
      CHECK(abs(determinant(w.sub_transform())) == 2);
      CHECK(determinant(w.super_transform()) == Rational(1, 2));
      // the sublattice is the kernel of f mod 2
      IntMatrix t = w.sub_transform();
      for (std::size_t i = 0; i < n; ++i) {
        Integer s = 0;
        for (std::size_t j = 0; j < n; ++j) s += t(i, j) * w.functional()[j];
        CHECK(s % 2 == 0);
      }
    }
    CHECK(count == (std::uint64_t{1} << n) - 1);
    CHECK(count == w.count());
  }
}

TEST_CASE("lattice text format") {
  Lattice l(RatMatrix{{1, Rational(1, 2)}, {0, 2}}, RatMatrix{{2, 0}, {0, 1}});
  std::stringstream ss;
  write_lattice(ss, l);
  Lattice back = read_lattice(ss);
  CHECK(back.basis() == l.basis());
  CHECK(back.form() == l.form());
  std::stringstream bad("lattice 2 2\n1 0\n0 1\n# gram\n1 0\n0 2\n");
  CHECK_THROWS_AS(read_lattice(bad), ParseError);
  std::stringstream ragged("lattice 2 2\n1 0\n0\n");
  CHECK_THROWS_AS(read_lattice(ragged), ParseError);
  std::stringstream dependent("lattice 2 2\n1 0\n2 0\n");
  CHECK_THROWS_AS(read_lattice(dependent), ParseError);
}

TEST_CASE("Leech lattice structure") {
  Lattice leech = build_leech();
  CHECK(leech.squared_determinant() == 1);
  CHECK(leech.is_even());
  CHECK(same_lattice(dual(leech), leech));

  IntVec v2 = leech_coords(leech, pad({4, 4}));
  IntVec v3 = leech_coords(leech, std::vector<int>{5, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
  CHECK(leech.coord_norm(v2) == 4);
  CHECK(leech.coord_norm(v3) == 6);

  Lattice l23 = orthogonal_section(leech, v2);
  CHECK(l23.rank() == 23);
  CHECK(l23.squared_determinant() == 4);
  Lattice l23d = dual(l23);
  CHECK(quotient_structure(make_pair(l23, l23d)).invariant_factors == std::vector<Integer>{4});
  Lattice o23 = glue_lattice(l23, 2);
  CHECK(o23.is_integral());
  CHECK(o23.squared_determinant() == 1);
  // the projection of a self-dual lattice is the dual of the section
  CHECK(same_lattice(project_orthogonal(leech, v2), l23d));

  // O23 is one of the index-2 superlattices: locate its functional
  Integer order;
  RatVec g = discriminant_generator(l23, &order);
  CHECK(order == 4);
  std::vector<std::uint8_t> f;
  for (const auto& q : g) f.push_back(static_cast<std::uint8_t>(mpz_fdiv_ui(Rational(q * 4).get_num_mpz_t(), 2)));
  RatMatrix gens(24, 23);
  for (std::size_t i = 0; i < 23; ++i) gens(i, i) = 1;
  for (std::size_t j = 0; j < 23; ++j) gens(23, j) = Rational(f[j], 2);
  CHECK(same_lattice(sublattice_from_coords(l23, gens), o23));

  Lattice s3 = orthogonal_section(leech, v3);
  CHECK(quotient_structure(make_pair(s3, dual(s3))).invariant_factors == std::vector<Integer>{6});
  CHECK(same_lattice(glue_lattice(s3, 6), dual(s3)));
}

TEST_CASE("Leech minimal vectors and sections" * doctest::timeout(120)) {
  Lattice leech = build_leech();
  auto m = Enumerator(leech).shortest();
  CHECK(m.dist_sq == 4);
  CHECK(m.points.size() == 196560);
  IntVec v2 = leech_coords(leech, pad({4, 4}));
  Lattice l23 = orthogonal_section(leech, v2);
  auto s = Enumerator(l23).shortest();
  CHECK(s.dist_sq == 4);
  CHECK(s.points.size() == 93150);
  auto d = Enumerator(dual(l23)).shortest();
  CHECK(d.dist_sq == 3);
  CHECK(d.points.size() == 4600);
}
