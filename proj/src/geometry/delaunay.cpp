#include "delone/geometry/delaunay.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "delone/exact/rank.hpp"

namespace delone {

namespace {

IntMatrix differences(const PointSet& points) {
  const std::size_t n = points.dim();
  IntMatrix d(points.size() - 1, n);
  for (std::size_t i = 1; i < points.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) d(i - 1, j) = points[i][j] - static_cast<long>(points[0][j]);
  return d;
}

// Squared G-distances from a rational center, up to a common affine rescaling:
// value(v) = den * v^T Gi v - 2 v^T Gi C with G = Gi / gd and c = C / den.
class DistanceProbe {
 public:
  DistanceProbe(const RatMatrix& gram, const RatVec& center) : n_(center.size()) {
    RatMatrix g = gram;
    gd_ = 1;
    for (const auto& e : g.data()) gd_ = lcm(gd_, Integer(e.get_den()));
    gi_ = IntMatrix(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) gi_(i, j) = Rational(gram(i, j) * gd_).get_num();
    den_ = lcm_denominators(center);
    IntVec c(n_);
    for (std::size_t i = 0; i < n_; ++i) c[i] = Rational(center[i] * den_).get_num();
    h_ = IntVec(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) h_[i] += gi_(i, j) * c[j];
    Integer cgc = 0;
    for (std::size_t i = 0; i < n_; ++i) cgc += c[i] * h_[i];
    cgc_ = cgc;
    small_ = true;
    for (const auto& e : gi_.data()) small_ = small_ && abs(e) < (Integer(1) << 30);
    for (const auto& e : h_) small_ = small_ && abs(e) < (Integer(1) << 60);
    if (small_) {
      g64_.resize(n_ * n_);
      h64_.resize(n_);
      for (std::size_t i = 0; i < n_; ++i) {
        h64_[i] = h_[i].get_si();
        for (std::size_t j = 0; j < n_; ++j) g64_[i * n_ + j] = gi_(i, j).get_si();
      }
    }
  }

  Integer value(std::span<const std::int32_t> v) const {
    if (small_) {
      __int128 q = 0, vh = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (v[i] == 0) continue;
        __int128 row = 0;
        for (std::size_t j = 0; j < n_; ++j) row += static_cast<__int128>(g64_[i * n_ + j]) * v[j];
        q += row * v[i];
        vh += static_cast<__int128>(h64_[i]) * v[i];
      }
      return den_ * wide(q) - 2 * wide(vh);
    }
    Integer q = 0, vh = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (v[i] == 0) continue;
      Integer row = 0;
      for (std::size_t j = 0; j < n_; ++j) row += gi_(i, j) * static_cast<long>(v[j]);
      q += row * static_cast<long>(v[i]);
      vh += h_[i] * static_cast<long>(v[i]);
    }
    return den_ * q - 2 * vh;
  }

  /// exact squared distance from the value
  Rational distance(const Integer& value) const { return make_rational(value * den_ + cgc_, den_ * den_ * gd_); }

 private:
  static Integer wide(__int128 x) {
    bool neg = x < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-x) : static_cast<unsigned __int128>(x);
    Integer r = (Integer(static_cast<unsigned long>(u >> 64)) << 64) + Integer(static_cast<unsigned long>(u));
    return neg ? Integer(-r) : r;
  }

  std::size_t n_;
  Integer gd_, den_, cgc_;
  IntMatrix gi_;
  IntVec h_;
  bool small_ = false;
  std::vector<std::int64_t> g64_, h64_;
};

}  // namespace

AffineFrame affine_frame(const PointSet& points) {
  AffineFrame f;
  if (points.empty()) throw PreconditionError("empty point set");
  f.basis.push_back(0);
  if (points.size() == 1) return f;
  IntMatrix d = differences(points);
  const std::size_t n = points.dim();
  ModularProfile prof = modular_profile(d, modular_prime(0));
  if (prof.rank < n) {
    std::size_t exact = certified_rank(to_rational(d)).rank;
    for (std::size_t k = 1; prof.rank < exact; ++k) prof = modular_profile(d, modular_prime(k));
  }
  f.dim = prof.rank;
  std::vector<std::size_t> rows = prof.pivot_rows;
  std::sort(rows.begin(), rows.end());
  for (auto r : rows) f.basis.push_back(r + 1);
  return f;
}

EmptySphere circumsphere(const PointSet& points, const RatMatrix& gram) {
  if (points.empty()) throw PreconditionError("circumsphere of an empty point set");
  const std::size_t n = points.dim();
  if (gram.rows() != n) throw PreconditionError("Gram matrix does not match the point dimension");
  AffineFrame f = affine_frame(points);
  RatVec p0 = points.to_rat_vec(0);
  EmptySphere s;
  s.center = p0;
  s.radius_sq = 0;
  if (f.dim > 0) {
    const std::size_t k = f.dim;
    std::vector<RatVec> e(k);
    std::vector<RatVec> ge(k);
    for (std::size_t j = 0; j < k; ++j) {
      e[j] = points.to_rat_vec(f.basis[j + 1]);
      for (std::size_t i = 0; i < n; ++i) e[j][i] -= p0[i];
      ge[j] = times_col(gram, e[j]);
    }
    RatMatrix m(k, k);
    RatVec rhs(k);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) m(a, b) = 2 * dot(e[a], ge[b]);
      rhs[a] = dot(e[a], ge[a]);
    }
    RatVec lambda = solve_left(m, rhs);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < n; ++i) s.center[i] += lambda[j] * e[j][i];
    RatVec diff = s.center;
    for (std::size_t i = 0; i < n; ++i) diff[i] -= p0[i];
    s.radius_sq = bilinear(diff, gram, diff);
  }
  DistanceProbe probe(gram, s.center);
  Integer ref = probe.value(points[0]);
  for (std::size_t i = 1; i < points.size(); ++i)
    if (probe.value(points[i]) != ref) throw PreconditionError("points are not co-spherical");
  if (probe.distance(ref) != s.radius_sq) throw IntegrityError("circumradius mismatch");
  return s;
}

EmptinessCertificate verify_empty_sphere(const Enumerator& en, const RatVec& center, const Rational& radius_sq,
                                         unsigned threads) {
  EmptinessCertificate c;
  BallPoints b = en.ball(center, radius_sq, threads);
  c.boundary = PointSet(en.rank());
  c.interior = PointSet(en.rank());
  for (std::size_t i = 0; i < b.points.size(); ++i) {
    if (b.dist_sq[i] == radius_sq) c.boundary.push_back(b.points[i]);
    else c.interior.push_back(b.points[i]);
  }
  c.empty = c.interior.empty();
  return c;
}

DelaunayCell delaunay_cell(const Enumerator& en, const RatVec& x, unsigned threads) {
  ClosestPoints cp = en.closest(x, threads);
  DelaunayCell cell;
  EmptySphere s = circumsphere(cp.points, en.gram());
  cell.center = s.center;
  cell.radius_sq = s.radius_sq;
  cell.vertices = std::move(cp.points);
  cell.affine_dim = affine_frame(cell.vertices).dim;
  cell.full_dimensional = cell.affine_dim == en.rank();
  return cell;
}

DelaunayCell cell_from_vertices(const Enumerator& en, PointSet vertices, unsigned threads) {
  vertices.sort_unique();
  EmptySphere s = circumsphere(vertices, en.gram());
  EmptinessCertificate cert = verify_empty_sphere(en, s.center, s.radius_sq, threads);
  if (!cert.empty) throw PreconditionError("circumsphere of the vertices contains lattice points");
  DelaunayCell cell;
  cell.center = s.center;
  cell.radius_sq = s.radius_sq;
  cell.vertices = std::move(cert.boundary);
  cell.affine_dim = affine_frame(cell.vertices).dim;
  cell.full_dimensional = cell.affine_dim == en.rank();
  return cell;
}

PointSet canonical_translate(const PointSet& vertices, IntVec* shift) {
  PointSet sorted = vertices;
  sorted.sort_unique();
  const std::size_t n = sorted.dim();
  // subtracting the lexicographically largest vertex gives the least translate
  std::vector<std::int32_t> top(sorted[sorted.size() - 1].begin(), sorted[sorted.size() - 1].end());
  PointSet out(n);
  out.reserve(sorted.size());
  std::vector<std::int32_t> row(n);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) row[j] = sorted[i][j] - top[j];
    out.push_back(row);
  }
  if (shift != nullptr) {
    shift->assign(n, Integer(0));
    for (std::size_t j = 0; j < n; ++j) (*shift)[j] = -top[j];
  }
  return out;
}

DelaunayCell translate(const DelaunayCell& cell, const IntVec& shift) {
  DelaunayCell out = cell;
  const std::size_t n = cell.vertices.dim();
  for (std::size_t j = 0; j < n; ++j) out.center[j] += shift[j];
  std::vector<std::int32_t> s(n);
  for (std::size_t j = 0; j < n; ++j) s[j] = checked_int32(shift[j]);
  for (std::size_t i = 0; i < out.vertices.size(); ++i) {
    auto row = out.vertices.mutable_row(i);
    for (std::size_t j = 0; j < n; ++j) row[j] += s[j];
  }
  return out;
}

Integer center_denominator(const DelaunayCell& cell) { return lcm_denominators(cell.center); }

void write_polytope(std::ostream& out, const DelaunayCell& cell, const std::string& lattice_file) {
  if (!lattice_file.empty()) out << "lattice-file " << lattice_file << '\n';
  out << "delaunay " << cell.vertices.dim() << ' ' << cell.vertices.size() << '\n';
  out << "center";
  for (const auto& c : cell.center) out << ' ' << to_string(c);
  out << "\nradius_sq " << to_string(cell.radius_sq) << '\n';
  for (std::size_t i = 0; i < cell.vertices.size(); ++i) {
    for (std::size_t j = 0; j < cell.vertices.dim(); ++j) out << (j ? " " : "") << cell.vertices[i][j];
    out << '\n';
  }
}

DelaunayCell read_polytope(std::istream& in, std::string* lattice_file) {
  std::string line;
  auto next = [&]() {
    while (std::getline(in, line))
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    return false;
  };
  if (!next()) throw ParseError("empty polytope input");
  std::istringstream ls(line);
  std::string tag;
  ls >> tag;
  if (tag == "lattice-file") {
    std::string path;
    std::getline(ls >> std::ws, path);
    while (!path.empty() && (path.back() == '\r' || path.back() == ' ')) path.pop_back();
    if (lattice_file != nullptr) *lattice_file = path;
    if (!next()) throw ParseError("missing 'delaunay' header");
    ls = std::istringstream(line);
    ls >> tag;
  } else if (lattice_file != nullptr) {
    lattice_file->clear();
  }
  long long rank = -1, count = -1;
  if (tag != "delaunay" || !(ls >> rank >> count) || rank < 0 || count < 1)
    throw ParseError("expected 'delaunay <rank> <nvertices>'");
  DelaunayCell cell;
  if (!next()) throw ParseError("missing center line");
  ls = std::istringstream(line);
  ls >> tag;
  if (tag != "center") throw ParseError("expected 'center'");
  std::string tok;
  while (ls >> tok) cell.center.push_back(parse_rational(tok));
  if (cell.center.size() != static_cast<std::size_t>(rank)) throw ParseError("center has the wrong length");
  if (!next()) throw ParseError("missing radius_sq line");
  ls = std::istringstream(line);
  ls >> tag;
  if (tag != "radius_sq" || !(ls >> tok)) throw ParseError("expected 'radius_sq'");
  cell.radius_sq = parse_rational(tok);
  cell.vertices = PointSet(static_cast<std::size_t>(rank));
  std::vector<std::int32_t> row(static_cast<std::size_t>(rank));
  for (long long i = 0; i < count; ++i) {
    if (!next()) throw ParseError("truncated vertex list");
    ls = std::istringstream(line);
    std::size_t j = 0;
    while (ls >> tok) {
      if (j == row.size()) throw ParseError("vertex has too many coordinates");
      Rational q = parse_rational(tok);
      if (q.get_den() != 1) throw ParseError("vertex coordinates must be integers");
      row[j++] = checked_int32(q.get_num());
    }
    if (j != row.size()) throw ParseError("vertex has too few coordinates");
    cell.vertices.push_back(row);
  }
  cell.vertices.sort_unique();
  return cell;
}

}  // namespace delone
