#include "delone/lattice/lattice.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "delone/exact/normal_form.hpp"

namespace delone {

Lattice::Lattice(RatMatrix basis) : basis_(std::move(basis)) {
  form_ = RatMatrix::identity(basis_.cols());
  gram_ = basis_ * basis_.transpose();
  if (basis_.rows() > basis_.cols() || !is_positive_definite(gram_))
    throw PreconditionError("basis rows are not linearly independent");
}

Lattice::Lattice(RatMatrix basis, RatMatrix form) : basis_(std::move(basis)), form_(std::move(form)) {
  if (form_.rows() != basis_.cols() || form_.cols() != basis_.cols())
    throw PreconditionError("ambient form has the wrong size");
  if (!form_.is_symmetric() || !is_positive_definite(form_))
    throw PreconditionError("ambient form is not positive definite");
  standard_form_ = form_ == RatMatrix::identity(form_.rows());
  gram_ = basis_ * form_ * basis_.transpose();
  if (basis_.rows() > basis_.cols() || !is_positive_definite(gram_))
    throw PreconditionError("basis rows are not linearly independent");
}

Lattice Lattice::from_gram(const RatMatrix& gram) {
  if (!gram.is_symmetric()) throw PreconditionError("Gram matrix is not symmetric");
  return Lattice(RatMatrix::identity(gram.rows()), gram);
}

Rational Lattice::inner(const RatVec& x, const RatVec& y) const {
  if (standard_form_) return dot(x, y);
  return bilinear(x, form_, y);
}

Rational Lattice::coord_norm(const IntVec& c) const { return bilinear(to_rational(c), gram_, to_rational(c)); }

std::optional<RatVec> Lattice::coordinates(const RatVec& x) const {
  if (x.size() != ambient_dim()) throw PreconditionError("vector has the wrong dimension");
  // c = (x A B^T) G^-1, valid exactly when x lies in the span
  RatVec xa = standard_form_ ? x : row_times(x, form_);
  RatVec rhs = times_col(basis_, xa);
  RatVec c = solve_left(gram_, rhs);
  if (point(c) != x) return std::nullopt;
  return c;
}

bool Lattice::contains(const RatVec& x) const {
  auto c = coordinates(x);
  if (!c) return false;
  for (const auto& q : *c)
    if (q.get_den() != 1) return false;
  return true;
}

bool Lattice::is_even() const {
  if (!is_integral()) return false;
  for (std::size_t i = 0; i < rank(); ++i)
    if (gram_(i, i).get_num() % 2 != 0) return false;
  return true;
}

RatMatrix coordinate_map(const Lattice& l) { return l.form() * l.basis().transpose() * inverse(l.gram()); }

Determinant determinant(const Lattice& l) {
  Rational d2 = l.squared_determinant();
  Rational root;
  if (is_square(d2, &root)) return {root, false};
  return {d2, true};
}

Lattice dual(const Lattice& l) { return Lattice(inverse(l.gram()) * l.basis(), l.form()); }

Lattice change_basis(const Lattice& l, const IntMatrix& t) {
  if (t.rows() != l.rank() || t.cols() != l.rank() || abs(determinant(t)) != 1)
    throw PreconditionError("basis change is not unimodular");
  return Lattice(to_rational(t) * l.basis(), l.form());
}

Lattice sublattice_from_coords(const Lattice& l, const RatMatrix& coords) {
  Integer den;
  IntMatrix z = clear_denominators(coords, &den);
  IntMatrix b = lattice_basis(z);
  RatMatrix c = to_rational(b);
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) c(i, j) /= den;
  return Lattice(c * l.basis(), l.form());
}

Section orthogonal_section_with_maps(const Lattice& l, const IntVec& v) {
  if (v.size() != l.rank()) throw PreconditionError("vector has the wrong dimension");
  Integer g = gcd_entries(v);
  if (g == 0) throw PreconditionError("section vector is zero");
  if (g != 1) throw PreconditionError("section vector is not primitive");
  RatVec gv = times_col(l.gram(), to_rational(v));
  RatMatrix m(1, l.rank());
  for (std::size_t j = 0; j < l.rank(); ++j) m(0, j) = gv[j];
  KernelBasis k = kernel_rational(m);
  Section s;
  s.lattice = Lattice(to_rational(k.basis) * l.basis(), l.form());
  s.embedding = std::move(k.basis);
  s.coordinates = std::move(k.coordinates);
  return s;
}

Lattice orthogonal_section(const Lattice& l, const IntVec& v) { return orthogonal_section_with_maps(l, v).lattice; }

Lattice project_orthogonal(const Lattice& l, const IntVec& v) {
  Section s = orthogonal_section_with_maps(l, v);
  RatVec x = l.point(v);
  Rational vv = l.norm(x);
  RatMatrix coords(l.rank(), s.lattice.rank());
  for (std::size_t i = 0; i < l.rank(); ++i) {
    RatVec b = l.basis().row_vec(i);
    Rational t = l.inner(b, x) / vv;
    for (std::size_t j = 0; j < b.size(); ++j) b[j] -= t * x[j];
    auto c = s.lattice.coordinates(b);
    if (!c) throw IntegrityError("projected vector left the orthogonal complement");
    for (std::size_t j = 0; j < c->size(); ++j) coords(i, j) = (*c)[j];
  }
  return sublattice_from_coords(s.lattice, coords);
}

std::vector<Integer> discriminant_group(const Lattice& l) {
  if (!l.is_integral()) throw PreconditionError("lattice is not integral");
  std::vector<Integer> out;
  for (const auto& d : elementary_divisors(to_integer(l.gram())))
    if (d > 1) out.push_back(d);
  return out;
}

RatVec discriminant_generator(const Lattice& l, Integer* order) {
  if (!l.is_integral()) throw PreconditionError("lattice is not integral");
  const std::size_t k = l.rank();
  SmithForm sf = smith(to_integer(l.gram()));
  for (std::size_t i = 0; i + 1 < k; ++i)
    if (sf.s(i, i) != 1) throw PreconditionError("discriminant group is not cyclic");
  *order = k == 0 ? Integer(1) : Integer(sf.s(k - 1, k - 1));
  if (k == 0) return {};
  RatMatrix vinv = inverse(to_rational(sf.v));
  return row_times(vinv.row_vec(k - 1), inverse(l.gram()));
}

Lattice glue_lattice(const Lattice& l, const Integer& d) {
  if (d <= 0) throw PreconditionError("glue index must be positive");
  Integer n;
  RatVec c = discriminant_generator(l, &n);
  if (n % d != 0) throw PreconditionError("glue index does not divide the discriminant order");
  if (d == 1) return l;
  RatMatrix gens(l.rank() + 1, l.rank());
  for (std::size_t i = 0; i < l.rank(); ++i) gens(i, i) = 1;
  Rational step(n / d);
  for (std::size_t j = 0; j < l.rank(); ++j) gens(l.rank(), j) = step * c[j];
  return sublattice_from_coords(l, gens);
}

namespace {

bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    auto p = line.find_first_not_of(" \t\r");
    if (p != std::string::npos) return true;
  }
  return false;
}

RatMatrix read_rows(std::istream& in, std::size_t rows, std::size_t cols, const char* what) {
  RatMatrix m(rows, cols);
  std::string line;
  for (std::size_t i = 0; i < rows; ++i) {
    if (!next_content_line(in, line)) throw ParseError(std::string("truncated ") + what);
    std::istringstream ls(line);
    std::string tok;
    std::size_t j = 0;
    while (ls >> tok) {
      if (j == cols) throw ParseError(std::string("too many entries in ") + what + " row");
      m(i, j++) = parse_rational(tok);
    }
    if (j != cols) throw ParseError(std::string("too few entries in ") + what + " row");
  }
  return m;
}

}  // namespace

Lattice read_lattice(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) throw ParseError("empty lattice input");
  std::istringstream hs(line);
  std::string tag;
  long long k = -1, m = -1;
  std::string extra;
  if (!(hs >> tag >> k >> m) || tag != "lattice" || k < 0 || m < 0 || (hs >> extra))
    throw ParseError("expected 'lattice <rank> <ambient_dim>'");
  RatMatrix basis = read_rows(in, static_cast<std::size_t>(k), static_cast<std::size_t>(m), "basis");
  std::optional<RatMatrix> form, gram;
  while (next_content_line(in, line)) {
    std::istringstream ls(line);
    std::string hash, block;
    ls >> hash >> block;
    if (hash != "#") throw ParseError("unexpected line after the basis: " + line);
    if (block == "form") {
      form = read_rows(in, static_cast<std::size_t>(m), static_cast<std::size_t>(m), "form");
    } else if (block == "gram") {
      gram = read_rows(in, static_cast<std::size_t>(k), static_cast<std::size_t>(k), "gram");
    } else {
      throw ParseError("unknown block '" + block + "'");
    }
  }
  Lattice l;
  try {
    l = form ? Lattice(basis, *form) : Lattice(basis);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("invalid lattice: ") + e.what());
  }
  if (gram && !(*gram == l.gram())) throw ParseError("stored Gram matrix does not match the basis");
  return l;
}

Lattice read_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  return read_lattice(in);
}

void write_lattice(std::ostream& out, const Lattice& l) {
  auto rows = [&](const RatMatrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) out << (j ? " " : "") << to_string(a(i, j));
      out << '\n';
    }
  };
  out << "lattice " << l.rank() << ' ' << l.ambient_dim() << '\n';
  rows(l.basis());
  if (!l.has_standard_form()) {
    out << "# form\n";
    rows(l.form());
  }
  out << "# gram\n";
  rows(l.gram());
}

}  // namespace delone
