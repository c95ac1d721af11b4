#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <random>

#include "delone/analysis/quadratic.hpp"
#include "delone/analysis/structure.hpp"
#include "delone/constructions/covering.hpp"
#include "delone/constructions/laminate.hpp"
#include "delone/constructions/main_delaunay.hpp"
#include "delone/geometry/tessellation.hpp"
#include "delone/lattice/catalog.hpp"

using namespace delone;

namespace {

const LeechContext& ctx() {
  static LeechContext c = LeechContext::build(2);
  return c;
}

IntVec min_row(std::size_t k) {
  const auto& m = ctx().min;
  IntVec v(m.dim);
  for (std::size_t i = 0; i < m.dim; ++i) v[i] = m.coords[k * m.dim + i];
  return v;
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

// is v (norm 12) a sum of two minimal vectors? |v - u|^2 = 4 iff <u, v> = 6
bool sum_of_two_minimal(const IntVec& v) {
  const Lattice& l = ctx().leech;
  RatVec x = l.point(v);
  std::vector<std::int32_t> amb;
  for (const auto& q : x) amb.push_back(static_cast<std::int32_t>(q.get_num().get_si()));
  for (auto ip : inner_products_scaled(ctx().min, amb))
    if (ip == 6 * 8) return true;
  return false;
}

}  // namespace

TEST_CASE("Leech construction" * doctest::timeout(300)) {
  const Lattice& l = ctx().leech;
  CHECK(l.squared_determinant() == 1);
  CHECK(l.is_even());
  CHECK(ctx().min.count() == 196560);
  for (std::size_t k = 0; k < ctx().min.count(); k += 997) CHECK(l.coord_norm(min_row(k)) == 4);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int t = 0; t < 1000; ++t) {
    IntVec v(24);
    for (auto& z : v) z = coef(rng);
    Rational n = l.coord_norm(v);
    CHECK((n.get_den() == 1 && n.get_num() % 2 == 0));
  }
  CHECK(l.coord_norm(leech_v2(l)) == 4);
  CHECK(l.coord_norm(leech_v3(l)) == 6);
  CHECK(l.coord_norm(leech_v5(l)) == 10);
  CHECK_THROWS_AS(leech_vector(l, std::vector<int>(24, 1)), PreconditionError);
}

TEST_CASE("minimal vector cache round trip") {
  auto dir = std::filesystem::temp_directory_path() / "delone-cache-test";
  std::filesystem::remove_all(dir);
  const char* old = std::getenv("DELONE_CACHE_DIR");
  std::string saved = old ? old : "";
  setenv("DELONE_CACHE_DIR", dir.c_str(), 1);
  Lattice e8 = lattice_e(8);
  MinimalVectors a = minimal_vectors(e8, 240);
  CHECK(std::filesystem::exists(dir));
  MinimalVectors b = minimal_vectors(e8, 240);
  CHECK(a.coords == b.coords);
  CHECK(a.ambient == b.ambient);
  CHECK_THROWS_AS(minimal_vectors(e8, 241), IntegrityError);
  if (old) setenv("DELONE_CACHE_DIR", saved.c_str(), 1);
  else unsetenv("DELONE_CACHE_DIR");
  std::filesystem::remove_all(dir);
}

TEST_CASE("vector classification" * doctest::timeout(600)) {
  const Lattice& l = ctx().leech;
  CHECK(classify_leech_vector(l, leech_v2(l)).label() == "2");
  CHECK(classify_leech_vector(l, leech_v3(l)).label() == "3");
  CHECK(classify_leech_vector(l, leech_v5(l)).label() == "5");

  IntVec v2 = leech_v2(l);
  auto t8 = classify_leech_vector(l, add(v2, v2));
  CHECK(t8.label() == "8_{2,2}");
  CHECK(add(t8.u1, t8.u2) == add(v2, v2));

  // norm-12 sums u + w of minimal vectors with <u, w> = 2 are 6_{2,2};
  // v3 + x with <v3, x> = 1 is 6_{3,2} exactly when it is not such a sum
  IntVec u = min_row(0);
  std::size_t seen22 = 0, seen32 = 0;
  for (std::size_t k = 1; k < ctx().min.count() && seen22 < 3; ++k) {
    IntVec w = min_row(k);
    IntVec s = add(u, w);
    if (l.coord_norm(s) != 12) continue;
    auto t = classify_leech_vector(l, s);
    CHECK(t.label() == "6_{2,2}");
    CHECK(l.coord_norm(t.u1) == 4);
    CHECK(l.coord_norm(t.u2) == 4);
    ++seen22;
  }
  IntVec v3 = leech_v3(l);
  for (std::size_t k = 0; k < ctx().min.count() && seen32 < 3; ++k) {
    IntVec w = min_row(k);
    IntVec s = add(v3, w);
    if (l.coord_norm(s) != 12) continue;
    auto t = classify_leech_vector(l, s);
    CHECK(t.label() == (sum_of_two_minimal(s) ? "6_{2,2}" : "6_{3,2}"));
    CHECK(add(t.u1, t.u2) == s);
    if (t.label() == "6_{3,2}") ++seen32;
  }
  CHECK(seen22 == 3);
  CHECK(seen32 == 3);

  IntVec big = add(add(v3, v3), v3);  // norm 54
  CHECK_THROWS_AS(classify_leech_vector(l, big), PreconditionError);
  IntVec zero(24);
  CHECK_THROWS_AS(classify_leech_vector(l, zero), PreconditionError);
}

TEST_CASE("covering bound and Smith point" * doctest::timeout(600)) {
  const Lattice& l = ctx().leech;
  CHECK(covering_bound(l, leech_v2(l)) == Rational(31, 16));
  CHECK(covering_bound(l, leech_v3(l)) == Rational(47, 24));
  CHECK(covering_bound(l, leech_v5(l)) < 2);
  CHECK(covering_bound(l, leech_v3(l)) > covering_bound(l, leech_v2(l)));

  Lattice z3 = lattice_zn(3);
  auto cube = check_smith_point(z3, {Rational(1, 2), Rational(1, 2), Rational(1, 2)}, Rational(3, 4));
  CHECK(cube.dist_sq == Rational(3, 4));
  CHECK(cube.count == 8);
  CHECK(cube.meets_bound);

  Lattice d23 = dual(orthogonal_section(l, leech_v2(l)));
  auto c = d23.coordinates(lambda23_smith_point());
  REQUIRE(c.has_value());
  auto rep = check_smith_point(d23, *c, Rational(31, 16));
  CHECK(rep.dist_sq == Rational(31, 16));
  CHECK(rep.count == 64);
  CHECK(rep.empty);
  CHECK(rep.meets_bound);

  Enumerator en(d23.gram());
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(0, 95);
  for (int t = 0; t < 100; ++t) {
    RatVec x(23);
    for (auto& q : x) q = make_rational(num(rng), 96);
    CHECK(en.closest(x).dist_sq <= Rational(31, 16));
  }
}

TEST_CASE("main Delaunay polytopes" * doctest::timeout(900)) {
  const Lattice& l = ctx().leech;
  MainDelaunayOptions opts;
  opts.threads = 2;
  SUBCASE("type 3, the 552-cell") {
    auto r = main_delaunay(ctx(), leech_v3(l), 3, 1, opts);
    CHECK(r.N == 552);
    CHECK(r.den == 2);
    CHECK(r.s == std::optional<std::size_t>(5));
    CHECK(r.ind == 1);
    CHECK(r.verified);
    CHECK(format_record(r).rfind("type=3 d=1 N=552 den=2 s=5 ind=1 verified=true", 0) == 0);
    CHECK(symmetry_kind(r.cell) == SymmetryKind::centrally_symmetric);
    CHECK(perfection_rank(r.cell, r.lattice.gram()).perfection_rank == 1);

    // f_D vanishes on the vertices and is positive on other lattice points
    QuadraticFunction f = build_fD(r.cell, r.lattice.gram());
    for (std::size_t v = 0; v < r.cell.vertices.size(); ++v) CHECK(f(r.cell.vertices[v]) == 0);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> coord(-3, 3);
    for (int t = 0; t < 1000; ++t) {
      std::vector<std::int32_t> y(23);
      for (auto& z : y) z = coord(rng);
      if (r.cell.vertices.contains(y)) continue;
      CHECK(f(y) > 0);
    }

    auto r3 = main_delaunay(ctx(), leech_v3(l), 3, 3, opts);
    CHECK(r3.N == 552);
    CHECK(r3.ind == 3);
    CHECK(r3.verified);
    CHECK(r3.slice.size() == 552);
  }
  SUBCASE("type 5, the 275-cell") {
    auto r = main_delaunay(ctx(), leech_v5(l), 4, 1, opts);
    CHECK(r.N == 275);
    CHECK_FALSE(r.full_dimensional);
    CHECK(r.affine_dim == 22);
    CHECK(r.den == 5);
    CHECK(r.s == std::optional<std::size_t>(4));
    CHECK(r.verified);
    CHECK(symmetry_kind(r.cell) == SymmetryKind::antisymmetric);
    CHECK(perfection_rank(r.cell, r.lattice.gram()).perfection_rank == 1);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(main_delaunay(ctx(), leech_v3(l), 0, 1, opts), PreconditionError);
    CHECK_THROWS_AS(main_delaunay(ctx(), leech_v3(l), 3, 4, opts), PreconditionError);
    CHECK_THROWS_AS(main_delaunay(ctx(), leech_v3(l), 100, 1, opts), PreconditionError);
  }
}

TEST_CASE("lamination construction" * doctest::timeout(900)) {
  SUBCASE("E6 Gosset cell lifts to the 56-vertex E7 cell") {
    Enumerator e6(lattice_e(6));
    DelaunayCell gosset;
    for (auto& c : tessellate(e6))
      if (c.vertices.size() == 27) gosset = c;
    REQUIRE(gosset.vertices.size() == 27);
    auto radii = radii_sequence(e6, gosset, 4);
    CHECK(radii[2].r_sq == 0);  // -3c is a lattice point
    auto res = laminate_extend(e6, gosset);
    CHECK(res.kind == LaminateKind::second_type);
    CHECK(res.delta_s == Rational(2, 3));
    CHECK(res.new_gram.rows() == 7);
    CHECK(symmetry_kind(res.new_cell) == SymmetryKind::centrally_symmetric);
    CHECK(res.perfection_after <= res.perfection_before);
    std::size_t e7_max = 0;
    for (auto& c : tessellate(Enumerator(lattice_e(7)))) e7_max = std::max(e7_max, c.vertices.size());
    CHECK(res.new_cell.vertices.size() == e7_max);
    CHECK(e7_max == 56);
    // some layer other than 0 and 1 attains the radius
    bool outer = false;
    for (auto i : res.layers) outer = outer || (i != 0 && i != 1);
    CHECK(outer);
  }
  SUBCASE("centrally symmetric cells are returned unchanged") {
    Enumerator z2(lattice_zn(2));
    auto cells = tessellate(z2);
    REQUIRE(cells.size() == 1);
    for (const auto& lr : radii_sequence(z2, cells[0], 5)) CHECK(lr.r_sq == cells[0].radius_sq);
    auto res = laminate_extend(z2, cells[0]);
    CHECK(res.kind == LaminateKind::first_type);
    CHECK(res.unchanged);
  }
  SUBCASE("A3 simplices have tden 4 and double in L + Z 2c") {
    Enumerator a3(lattice_an(3));
    for (auto& c : tessellate(a3)) {
      if (tden(c.center) != 4) continue;
      auto res = laminate_extend(a3, c);
      CHECK(res.kind == LaminateKind::first_type);
      CHECK_FALSE(res.unchanged);
      CHECK(res.new_cell.vertices.size() == 2 * c.vertices.size());
      CHECK(symmetry_kind(res.new_cell) == SymmetryKind::centrally_symmetric);
    }
  }
  SUBCASE("the 275-cell lifts to 552 vertices") {
    MainDelaunayOptions opts;
    opts.threads = 2;
    auto r = main_delaunay(ctx(), leech_v5(ctx().leech), 4, 1, opts);
    Enumerator en(r.lattice.gram());
    auto res = laminate_extend(en, r.cell, true, 2);
    CHECK(res.kind == LaminateKind::second_type);
    CHECK(res.new_cell.vertices.size() == 552);
    CHECK(res.perfection_after == std::optional<std::size_t>(1));
  }
}
