#include <doctest.h>

#include <set>
#include <sstream>

#include "delone/geometry/tessellation.hpp"
#include "delone/lattice/catalog.hpp"
#include "oracles.hpp"

using namespace delone;

namespace {

PointSet points(std::initializer_list<std::vector<std::int32_t>> rows) {
  PointSet p(rows.begin()->size());
  for (const auto& r : rows) p.push_back(r);
  return p;
}

}  // namespace

TEST_CASE("circumsphere") {
  SUBCASE("interval") {
    auto s = circumsphere(points({{0}, {1}}), RatMatrix::identity(1));
    CHECK(s.center[0] == Rational(1, 2));
    CHECK(s.radius_sq == Rational(1, 4));
  }
  SUBCASE("unit square") {
    auto s = circumsphere(points({{0, 0}, {1, 0}, {0, 1}, {1, 1}}), RatMatrix::identity(2));
    CHECK(s.center == RatVec{Rational(1, 2), Rational(1, 2)});
    CHECK(s.radius_sq == Rational(1, 2));
  }
  SUBCASE("segment in the plane keeps the center on the segment") {
    auto s = circumsphere(points({{0, 0}, {2, 2}}), RatMatrix::identity(2));
    CHECK(s.center == RatVec{1, 1});
    CHECK(s.radius_sq == 2);
  }
  SUBCASE("not co-spherical") {
    CHECK_THROWS_AS(circumsphere(points({{0}, {1}, {2}}), RatMatrix::identity(1)), PreconditionError);
  }
}

TEST_CASE("empty sphere certificates in Z^2") {
  Enumerator en(RatMatrix::identity(2));
  RatVec c{Rational(1, 2), Rational(1, 2)};
  auto a = verify_empty_sphere(en, c, Rational(1, 2));
  CHECK(a.empty);
  CHECK(a.boundary.size() == 4);
  auto b = verify_empty_sphere(en, c, Rational(3, 4));
  CHECK_FALSE(b.empty);
  CHECK(b.boundary.size() == 0);
  CHECK(b.interior.size() == 4);
}

TEST_CASE("delaunay cells") {
  SUBCASE("unit square") {
    Enumerator en(RatMatrix::identity(2));
    auto cell = delaunay_cell(en, {Rational(1, 2), Rational(1, 2)});
    CHECK(cell.full_dimensional);
    CHECK(cell.vertices.size() == 4);
    CHECK(cell.radius_sq == Rational(1, 2));
  }
  SUBCASE("lower-dimensional cell is recentered") {
    Enumerator en(RatMatrix::identity(2));
    auto cell = delaunay_cell(en, {Rational(1, 2), Rational(1, 10)});
    CHECK_FALSE(cell.full_dimensional);
    CHECK(cell.affine_dim == 1);
    CHECK(cell.center == RatVec{Rational(1, 2), 0});
  }
  SUBCASE("generic point of Z^n recenters to a cube") {
    for (std::size_t n = 1; n <= 4; ++n) {
      Enumerator en(RatMatrix::identity(n));
      auto cell = start_cell(en, 5);
      CHECK(cell.full_dimensional);
      CHECK(cell.vertices.size() == (std::size_t{1} << n));
      CHECK(cell.radius_sq == make_rational(static_cast<long>(n), 4));
    }
  }
}

TEST_CASE("facets") {
  auto sq = facets(points({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  CHECK(sq.size() == 4);
  for (const auto& f : sq) CHECK(f.vertices.size() == 2);
  auto cube = facets(points({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}));
  CHECK(cube.size() == 6);
  auto oct = facets(points({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}));
  CHECK(oct.size() == 8);
  for (const auto& f : oct) {
    CHECK(f.vertices.size() == 3);
    CHECK(f.offset == 1);
  }
}

TEST_CASE("adjacent cells") {
  SUBCASE("Z^2 square across the right facet") {
    Enumerator en(RatMatrix::identity(2));
    auto cell = delaunay_cell(en, {Rational(1, 2), Rational(1, 2)});
    for (const auto& f : facets(cell.vertices)) {
      auto adj = adjacent_cell(en, cell, f);
      CHECK(adj.vertices.size() == 4);
      CHECK(canonical_translate(adj.vertices) == canonical_translate(cell.vertices));
      for (auto i : f.vertices) CHECK(adj.vertices.contains(cell.vertices[i]));
    }
  }
  SUBCASE("A2 triangles alternate") {
    Enumerator en(lattice_an(2));
    auto up = delaunay_cell(en, {Rational(2, 3), Rational(1, 3)});
    REQUIRE(up.vertices.size() == 3);
    for (const auto& f : facets(up.vertices)) {
      auto down = adjacent_cell(en, up, f);
      CHECK(down.vertices.size() == 3);
      CHECK_FALSE(canonical_translate(down.vertices) == canonical_translate(up.vertices));
    }
  }
}

TEST_CASE("tessellations") {
  SUBCASE("Z^n has one class") {
    for (std::size_t n = 1; n <= 4; ++n) CHECK(tessellate(Enumerator(RatMatrix::identity(n))).size() == 1);
  }
  SUBCASE("covering radius of Z^n") {
    for (std::size_t n = 1; n <= 6; ++n)
      CHECK(covering_radius_sq(Enumerator(RatMatrix::identity(n))) == make_rational(static_cast<long>(n), 4));
  }
  SUBCASE("A2: two triangles") {
    Enumerator en(lattice_an(2));
    auto cls = tessellate(en);
    CHECK(cls.size() == 2);
    CHECK(covering_radius_sq(en) == Rational(2, 3));
  }
  SUBCASE("every cell is empty and every facet is matched") {
    Enumerator en(lattice_an(3));
    auto cls = tessellate(en);
    std::set<std::vector<std::int32_t>> keys;
    for (const auto& c : cls) {
      auto k = canonical_translate(c.vertices);
      keys.insert(std::vector<std::int32_t>(k.data(), k.data() + k.size() * k.dim()));
      auto cert = verify_empty_sphere(en, c.center, c.radius_sq);
      CHECK(cert.empty);
      CHECK(cert.boundary == c.vertices);
    }
    for (const auto& c : cls)
      for (const auto& f : facets(c.vertices)) {
        auto adj = adjacent_cell(en, c, f);
        auto k = canonical_translate(adj.vertices);
        CHECK(keys.count(std::vector<std::int32_t>(k.data(), k.data() + k.size() * k.dim())) == 1);
        // the facet is shared and the new cell sits on the other side
        for (auto i : f.vertices) CHECK(adj.vertices.contains(c.vertices[i]));
        for (std::size_t v = 0; v < adj.vertices.size(); ++v) {
          Integer s = 0;
          for (std::size_t j = 0; j < 3; ++j) s += f.normal[j] * static_cast<long>(adj.vertices[v][j]);
          CHECK(s >= f.offset);
        }
      }
  }
  SUBCASE("E6 contains the 27-vertex cell") {
    Enumerator en(lattice_e(6));
    auto cls = tessellate(en);
    bool gosset = false;
    Rational big = 0;
    for (const auto& c : cls) {
      if (c.vertices.size() == 27) {
        gosset = true;
        big = c.radius_sq;
      }
    }
    CHECK(gosset);
    CHECK(big == Rational(4, 3));
    CHECK(covering_radius_sq(en) == big);
  }
  SUBCASE("rank guard") {
    TessellationOptions opts;
    opts.max_rank = 2;
    CHECK_THROWS_AS(tessellate(Enumerator(RatMatrix::identity(3)), opts), PreconditionError);
  }
}

TEST_CASE("polytope text round trip") {
  Enumerator en(RatMatrix::identity(2));
  auto cell = delaunay_cell(en, {Rational(1, 2), Rational(1, 2)});
  std::stringstream ss;
  write_polytope(ss, cell, "z2.lat");
  std::string path;
  auto back = read_polytope(ss, &path);
  CHECK(path == "z2.lat");
  CHECK(back.vertices == cell.vertices);
  CHECK(back.center == cell.center);
  CHECK(back.radius_sq == cell.radius_sq);
  std::stringstream bad("delaunay 2 1\ncenter 1/2\nradius_sq 1\n0 0\n");
  CHECK_THROWS_AS(read_polytope(bad, nullptr), ParseError);
}
