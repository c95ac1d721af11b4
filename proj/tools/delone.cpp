// delone: command-line front end for the library.
//
// Exit codes: 0 success, 2 precondition violated, 64 usage error,
// 65 malformed input, 70 internal consistency failure.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "delone/analysis/design.hpp"
#include "delone/analysis/lamination.hpp"
#include "delone/analysis/quadratic.hpp"
#include "delone/analysis/structure.hpp"
#include "delone/constructions/covering.hpp"
#include "delone/constructions/laminate.hpp"
#include "delone/constructions/main_delaunay.hpp"
#include "delone/geometry/tessellation.hpp"
#include "delone/lattice/catalog.hpp"
#include "delone/lattice/sublattices.hpp"

using namespace delone;
namespace fs = std::filesystem;

namespace {

struct Options {
  unsigned threads = 1;
  std::size_t max_rank_guard = 8;
  bool allow_large = false;
  bool quiet = false;
};

Options g_opts;

void progress(const std::string& msg) {
  if (!g_opts.quiet) std::cerr << "[delone] " << msg << std::endl;
}

std::size_t parse_size(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size() || v < 0) throw std::invalid_argument(s);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw PreconditionError(std::string("bad ") + what + ": " + s);
  }
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) {
    for (char& c : tok)
      if (c == ',') c = ' ';
    std::istringstream t(tok);
    std::string part;
    while (t >> part) out.push_back(part);
  }
  return out;
}

RatVec parse_vector(const std::string& s) {
  RatVec v;
  for (const auto& tok : split_ws(s)) v.push_back(parse_rational(tok));
  return v;
}

const Lattice& leech() {
  static Lattice l = build_leech();
  return l;
}

Lattice lambda23() { return orthogonal_section(leech(), leech_v2(leech())); }

bool catalog_lattice(const std::string& name, Lattice* out) {
  auto param = [&](const char* prefix) -> std::optional<std::size_t> {
    std::string p(prefix);
    if (name.rfind(p, 0) != 0) return std::nullopt;
    return parse_size(name.substr(p.size()), "catalog parameter");
  };
  if (name == "leech") *out = leech();
  else if (name == "lambda23") *out = lambda23();
  else if (name == "o23") *out = glue_lattice(lambda23(), 2);
  else if (name == "lambda23dual") *out = dual(lambda23());
  else if (name == "e6") *out = lattice_e(6);
  else if (name == "e7") *out = lattice_e(7);
  else if (name == "e8") *out = lattice_e(8);
  else if (auto n = param("an:")) *out = lattice_an(*n);
  else if (auto n2 = param("dn:")) *out = lattice_dn(*n2);
  else if (auto n3 = param("zn:")) *out = lattice_zn(*n3);
  else return false;
  return true;
}

// catalog name or lattice file; relative paths are also tried against `base`
Lattice resolve_lattice(const std::string& name, const fs::path& base = {}) {
  Lattice l;
  if (catalog_lattice(name, &l)) return l;
  fs::path p(name);
  if (!fs::exists(p) && !base.empty() && p.is_relative() && fs::exists(base / p)) p = base / p;
  if (!fs::exists(p)) throw ParseError("no such lattice file or catalog name: " + name);
  return read_lattice_file(p.string());
}

void write_text(const std::string& path, const std::function<void(std::ostream&)>& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write " + path);
  fn(out);
}

void print_vec(std::ostream& out, const RatVec& v) {
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << to_string(v[i]);
}

void print_vec(std::ostream& out, const IntVec& v) {
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
}

struct LoadedPolytope {
  Lattice lattice;
  DelaunayCell cell;
  std::string lattice_name;
};

// Reads a polytope file and re-certifies it against its lattice.
LoadedPolytope load_polytope(const std::string& path, const std::string& lattice_override) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  LoadedPolytope p;
  DelaunayCell raw = read_polytope(in, &p.lattice_name);
  if (!lattice_override.empty()) p.lattice_name = lattice_override;
  if (p.lattice_name.empty()) throw ParseError("polytope file names no lattice; pass --lattice");
  p.lattice = resolve_lattice(p.lattice_name, fs::path(path).parent_path());
  if (p.lattice.rank() != raw.vertices.dim()) throw ParseError("polytope and lattice ranks differ");
  Enumerator en(p.lattice.gram());
  p.cell = cell_from_vertices(en, raw.vertices, g_opts.threads);
  if (p.cell.center != raw.center || p.cell.radius_sq != raw.radius_sq || !(p.cell.vertices == raw.vertices))
    throw ParseError("polytope file does not describe a Delaunay cell of its lattice");
  return p;
}

IntVec leech_type_vector(const std::string& type, const std::string& vector) {
  if (!vector.empty()) {
    std::vector<int> xs;
    for (const auto& q : parse_vector(vector)) {
      if (q.get_den() != 1) throw PreconditionError("vector entries must be integers (sqrt(8) scale)");
      xs.push_back(static_cast<int>(q.get_num().get_si()));
    }
    if (xs.size() != 24) throw PreconditionError("Leech vectors have 24 coordinates");
    return leech_vector(leech(), xs);
  }
  if (type == "2") return leech_v2(leech());
  if (type == "3") return leech_v3(leech());
  if (type == "5") return leech_v5(leech());
  throw PreconditionError("--type must be 2, 3 or 5 (or pass --vector)");
}

void guard_rank(std::size_t rank) {
  if (rank > g_opts.max_rank_guard && !g_opts.allow_large)
    throw PreconditionError("rank " + std::to_string(rank) + " exceeds --max-rank-guard " +
                            std::to_string(g_opts.max_rank_guard) + "; pass --allow-large");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"delone: exact Delaunay polytopes of lattices"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", g_opts.threads, "worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--max-rank-guard", g_opts.max_rank_guard, "largest rank accepted by tessellation verbs");
  app.add_flag("--allow-large", g_opts.allow_large, "permit stretch-scale computations");
  app.add_flag("-q,--quiet", g_opts.quiet, "no progress on stderr");
  for (auto* o : app.get_options()) o->configurable(false);

  std::function<void()> action;
  auto verb = [&](CLI::App* sub, std::function<void()> fn) { sub->callback([&action, fn] { action = fn; }); };

  // lattice ...
  auto* lat = app.add_subcommand("lattice", "lattice operations");
  lat->require_subcommand(1);
  std::string lat_name, out_path, norm_q;
  bool list = false;
  std::size_t limit = 0;

  auto* lat_info = lat->add_subcommand("info", "rank, determinant, integrality");
  lat_info->add_option("lattice", lat_name)->required();
  verb(lat_info, [&] {
    Lattice l = resolve_lattice(lat_name);
    Determinant d = determinant(l);
    std::cout << "rank " << l.rank() << "\nambient_dim " << l.ambient_dim() << '\n';
    std::cout << (d.squared ? "det_squared " : "det ") << to_string(d.value) << '\n';
    std::cout << "integral " << (l.is_integral() ? "true" : "false") << "\neven " << (l.is_even() ? "true" : "false") << '\n';
    if (l.is_integral()) {
      std::cout << "discriminant";
      auto g = discriminant_group(l);
      if (g.empty()) std::cout << " trivial";
      for (const auto& e : g) std::cout << ' ' << e;
      std::cout << '\n';
    }
  });

  auto* lat_dual = lat->add_subcommand("dual", "dual lattice");
  lat_dual->add_option("lattice", lat_name)->required();
  lat_dual->add_option("-o,--output", out_path);
  verb(lat_dual, [&] {
    Lattice d = dual(resolve_lattice(lat_name));
    write_text(out_path, [&](std::ostream& o) { write_lattice(o, d); });
  });

  auto* lat_min = lat->add_subcommand("min", "minimal vectors");
  lat_min->add_option("lattice", lat_name)->required();
  lat_min->add_flag("--list", list, "print the vectors (lattice coordinates)");
  verb(lat_min, [&] {
    Lattice l = resolve_lattice(lat_name);
    PointSet pts;
    Rational norm;
    if (lat_name == "leech") {
      progress("minimal vectors of the Leech lattice");
      MinimalVectors m = minimal_vectors(l, 196560, g_opts.threads);
      pts = PointSet(m.dim);
      for (std::size_t k = 0; k < m.count(); ++k)
        pts.push_back(std::span<const std::int32_t>(m.coords.data() + k * m.dim, m.dim));
      pts.sort_unique();
      norm = 4;
    } else {
      ClosestPoints cp = shortest_vectors(l, g_opts.threads);
      pts = std::move(cp.points);
      norm = cp.dist_sq;
    }
    std::cout << "norm " << to_string(norm) << ", count " << pts.size() << '\n';
    if (list)
      for (std::size_t i = 0; i < pts.size(); ++i) {
        print_vec(std::cout, pts.to_int_vec(i));
        std::cout << '\n';
      }
  });

  auto* lat_norm = lat->add_subcommand("norm", "vectors of a given norm");
  lat_norm->add_option("lattice", lat_name)->required();
  lat_norm->add_option("norm", norm_q)->required();
  lat_norm->add_flag("--list", list);
  verb(lat_norm, [&] {
    Lattice l = resolve_lattice(lat_name);
    Rational q = parse_rational(norm_q);
    PointSet pts = vectors_of_norm(l, q, g_opts.threads);
    std::cout << "norm " << to_string(q) << ", count " << pts.size() << '\n';
    if (list)
      for (std::size_t i = 0; i < pts.size(); ++i) {
        print_vec(std::cout, pts.to_int_vec(i));
        std::cout << '\n';
      }
  });

  auto index2 = [&](bool super) {
    Lattice l = resolve_lattice(lat_name);
    Index2Walker walk(l.rank());
    std::cout << (super ? "superlattices " : "sublattices ") << walk.count() << '\n';
    std::size_t shown = 0;
    while (walk.next() && (limit == 0 || shown < limit)) {
      ++shown;
      Lattice m = super ? Lattice(walk.super_transform() * l.basis(), l.form())
                        : Lattice(to_rational(walk.sub_transform()) * l.basis(), l.form());
      std::cout << "f=";
      for (auto b : walk.functional()) std::cout << int(b);
      std::cout << " det_squared=" << to_string(m.squared_determinant()) << " integral=" << (m.is_integral() ? "true" : "false")
                << " even=" << (m.is_even() ? "true" : "false") << '\n';
    }
  };
  auto* lat_sub = lat->add_subcommand("sublattices", "index-2 sublattices");
  lat_sub->add_option("lattice", lat_name)->required();
  lat_sub->add_option("--limit", limit, "stop after this many (0 = all)");
  verb(lat_sub, [&] { index2(false); });
  auto* lat_sup = lat->add_subcommand("superlattices", "index-2 superlattices");
  lat_sup->add_option("lattice", lat_name)->required();
  lat_sup->add_option("--limit", limit, "stop after this many (0 = all)");
  verb(lat_sup, [&] { index2(true); });

  // delaunay ...
  auto* del = app.add_subcommand("delaunay", "Delaunay cells and tessellations");
  del->require_subcommand(1);
  std::string point_text, emit_dir;
  bool ambient = false;

  auto* del_at = del->add_subcommand("at", "Delaunay cell of the closest points to x");
  del_at->add_option("lattice", lat_name)->required();
  del_at->add_option("--point", point_text, "lattice coordinates (or ambient with --ambient)")->required();
  del_at->add_flag("--ambient", ambient);
  del_at->add_option("-o,--output", out_path);
  verb(del_at, [&] {
    Lattice l = resolve_lattice(lat_name);
    RatVec x = parse_vector(point_text);
    if (ambient) {
      auto c = l.coordinates(x);
      if (!c) throw PreconditionError("point is outside the lattice span");
      x = *c;
    }
    if (x.size() != l.rank()) throw PreconditionError("point has the wrong dimension");
    DelaunayCell cell = delaunay_cell(Enumerator(l.gram()), x, g_opts.threads);
    write_text(out_path, [&](std::ostream& o) { write_polytope(o, cell, lat_name); });
  });

  auto* del_tess = del->add_subcommand("tessellate", "translation classes of Delaunay cells");
  del_tess->add_option("lattice", lat_name)->required();
  del_tess->add_option("--emit", emit_dir, "write class<i>.poly files here");
  verb(del_tess, [&] {
    Lattice l = resolve_lattice(lat_name);
    guard_rank(l.rank());
    TessellationOptions o;
    o.max_rank = g_opts.max_rank_guard;
    o.allow_large = g_opts.allow_large;
    o.threads = g_opts.threads;
    auto classes = tessellate(Enumerator(l.gram()), o);
    std::cout << "classes " << classes.size() << '\n';
    if (!emit_dir.empty()) fs::create_directories(emit_dir);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const auto& c = classes[i];
      std::cout << "class " << i << " N=" << c.vertices.size() << " radius_sq=" << to_string(c.radius_sq)
                << " tden=" << tden(c.center) << '\n';
      if (!emit_dir.empty()) {
        std::ofstream f(fs::path(emit_dir) / ("class" + std::to_string(i) + ".poly"));
        write_polytope(f, c, lat_name);
      }
    }
  });

  auto* del_cov = del->add_subcommand("covering-radius", "squared covering radius");
  del_cov->add_option("lattice", lat_name)->required();
  verb(del_cov, [&] {
    Lattice l = resolve_lattice(lat_name);
    guard_rank(l.rank());
    TessellationOptions o;
    o.max_rank = g_opts.max_rank_guard;
    o.allow_large = g_opts.allow_large;
    o.threads = g_opts.threads;
    std::cout << "covering_radius_sq " << to_string(covering_radius_sq(Enumerator(l.gram()), o)) << '\n';
  });

  // polytope ...
  auto* pol = app.add_subcommand("polytope", "properties of a Delaunay polytope file");
  pol->require_subcommand(1);
  std::string poly_path, lattice_override, bound_text = "auto";
  std::size_t t_max = 11;

  auto poly_sub = [&](const char* name, const char* help) {
    auto* s = pol->add_subcommand(name, help);
    s->add_option("polytope", poly_path)->required();
    s->add_option("--lattice", lattice_override, "lattice (overrides the file's lattice-file line)");
    return s;
  };

  verb(poly_sub("perfrank", "perfection rank"), [&] {
    auto p = load_polytope(poly_path, lattice_override);
    PerfectionReport r = perfection_rank(p.cell, p.lattice.gram());
    std::cout << "vertices " << p.cell.vertices.size() << "\ndim_quadratics " << r.dim_quadratics << "\nconstraint_rank "
              << r.constraint_rank << "\nperfection_rank " << r.perfection_rank << "\nperfect "
              << (r.is_perfect ? "true" : "false") << "\nprimes " << r.primes << '\n';
  });

  auto* pol_strength = poly_sub("strength", "spherical design strength");
  pol_strength->add_option("--t-max", t_max);
  verb(pol_strength, [&] {
    auto p = load_polytope(poly_path, lattice_override);
    std::cout << "strength " << design_strength(p.cell, p.lattice.gram(), t_max, g_opts.threads) << '\n';
  });

  verb(poly_sub("tden", "center denominator and symmetry"), [&] {
    auto p = load_polytope(poly_path, lattice_override);
    std::cout << "tden " << tden(p.cell.center) << "\nsymmetry " << to_string(symmetry_kind(p.cell)) << '\n';
    AffineLattice al = affine_lattice(p.cell);
    std::cout << "affine_rank " << al.rank << "\nind " << al.index << '\n';
  });

  auto* pol_wu = poly_sub("width-upper", "upper bound on the lamination number");
  pol_wu->add_option("--bound", bound_text, "dual norm bound for the functional search (auto = twice the dual minimum)");
  verb(pol_wu, [&] {
    auto p = load_polytope(poly_path, lattice_override);
    Rational bound;
    if (bound_text == "auto") bound = 2 * shortest_vectors(dual(p.lattice), g_opts.threads).dist_sq;
    else bound = parse_rational(bound_text);
    WidthUpperBound w = lamination_number_upper(p.cell, p.lattice.gram(), bound, g_opts.threads);
    std::cout << "laminae " << w.laminae << "\nwitness ";
    print_vec(std::cout, w.witness);
    std::cout << "\nlower " << w.lower << "\nexact " << (w.exact ? "true" : "false") << '\n';
  });

  verb(poly_sub("width-proof", "index-2 certificate of lamination number >= 5"), [&] {
    auto p = load_polytope(poly_path, lattice_override);
    if (p.lattice.rank() > 16 && !g_opts.allow_large)
      throw PreconditionError("width-proof in rank " + std::to_string(p.lattice.rank()) + " needs --allow-large");
    WidthProof w = width_lower_bound_index2(
        p.cell, [](std::uint64_t k) { if (k % 65536 < 1024) progress("index-2 sublattices: " + std::to_string(k)); },
        g_opts.threads);
    std::cout << "success " << (w.success ? "true" : "false") << "\nsublattices " << w.sublattices << "\nlaminations "
              << w.laminations << '\n';
    if (!w.success) {
      std::cout << "reason " << w.reason << "\nwitness_parity ";
      for (auto b : w.witness_parity) std::cout << int(b);
      std::cout << '\n';
      if (!w.witness_lamination.empty()) {
        std::cout << "witness_lamination ";
        print_vec(std::cout, w.witness_lamination);
        std::cout << '\n';
      }
    }
  });

  auto* pol_lam = poly_sub("laminate", "centrally symmetric extension");
  pol_lam->add_option("-o,--output", out_path, "prefix for <prefix>.lat and <prefix>.poly");
  verb(pol_lam, [&] {
    auto p = load_polytope(poly_path, lattice_override);
    Enumerator en(p.lattice.gram());
    LaminateResult r = laminate_extend(en, p.cell, p.cell.vertices.size() <= 20000 || g_opts.allow_large, g_opts.threads);
    std::cout << "kind " << to_string(r.kind) << "\ndelta_s " << to_string(r.delta_s) << "\nunchanged "
              << (r.unchanged ? "true" : "false") << "\nrank " << r.new_gram.rows() << "\nvertices "
              << r.new_cell.vertices.size() << "\ntden " << tden(r.new_cell.center) << '\n';
    std::cout << "radii";
    for (const auto& lr : r.radii) std::cout << ' ' << lr.i << ':' << to_string(lr.r_sq);
    std::cout << '\n';
    if (!r.layers.empty()) {
      std::cout << "layers";
      for (auto i : r.layers) std::cout << ' ' << i;
      std::cout << '\n';
    }
    if (r.perfection_before)
      std::cout << "perfection_rank " << *r.perfection_before << " -> " << *r.perfection_after << '\n';
    if (!out_path.empty()) {
      Lattice nl = Lattice::from_gram(r.new_gram);
      write_text(out_path + ".lat", [&](std::ostream& o) { write_lattice(o, nl); });
      write_text(out_path + ".poly", [&](std::ostream& o) {
        write_polytope(o, r.new_cell, fs::path(out_path + ".lat").filename().string());
      });
    }
  });

  // leech ...
  auto* lee = app.add_subcommand("leech", "Leech lattice constructions");
  lee->require_subcommand(1);
  std::string type = "2", vector_text, alpha_text = "auto", d_text = "auto";
  std::size_t samples = 0;
  bool with_perf = false, all_rows = false;

  auto* lee_build = lee->add_subcommand("build", "build and verify the Leech lattice");
  lee_build->add_option("-o,--output", out_path, "write the lattice file");
  verb(lee_build, [&] {
    const Lattice& l = leech();
    progress("enumerating minimal vectors");
    MinimalVectors m = minimal_vectors(l, 196560, g_opts.threads);
    std::cout << "rank 24\ndet " << to_string(determinant(l).value) << "\neven " << (l.is_even() ? "true" : "false")
              << "\nmin_norm 4\nmin_count " << m.count() << '\n';
    if (!out_path.empty()) write_text(out_path, [&](std::ostream& o) { write_lattice(o, l); });
  });

  auto type_opts = [&](CLI::App* s) {
    s->add_option("--type", type, "2, 3 or 5: the fixed representatives (4,4,0^22), (5,1^23), (5,5,-3,1^21)");
    s->add_option("--vector", vector_text, "24 integers, sqrt(8)-scaled ambient coordinates");
  };

  auto* lee_cls = lee->add_subcommand("classify", "vector type");
  type_opts(lee_cls);
  verb(lee_cls, [&] {
    IntVec v = leech_type_vector(type, vector_text);
    LeechVectorType t = classify_leech_vector(leech(), v);
    std::cout << "norm " << 2 * t.n << "\ntype " << t.label() << '\n';
    if (t.decomposition) {
      std::cout << "u1 ";
      print_vec(std::cout, leech().point(t.u1));
      std::cout << "\nu2 ";
      print_vec(std::cout, leech().point(t.u2));
      std::cout << '\n';
    }
  });

  auto* lee_sec = lee->add_subcommand("section", "the section orthogonal to v");
  type_opts(lee_sec);
  lee_sec->add_option("-o,--output", out_path);
  verb(lee_sec, [&] {
    Lattice s = orthogonal_section(leech(), leech_type_vector(type, vector_text));
    write_text(out_path, [&](std::ostream& o) { write_lattice(o, s); });
  });

  auto* lee_glue = lee->add_subcommand("glue", "glue(section, d)");
  type_opts(lee_glue);
  lee_glue->add_option("--d", d_text)->required();
  lee_glue->add_option("-o,--output", out_path);
  verb(lee_glue, [&] {
    Lattice s = orthogonal_section(leech(), leech_type_vector(type, vector_text));
    Lattice g = glue_lattice(s, Integer(static_cast<unsigned long>(parse_size(d_text, "d"))));
    write_text(out_path, [&](std::ostream& o) { write_lattice(o, g); });
  });

  auto* lee_t1 = lee->add_subcommand("table1", "main Delaunay polytopes of a vector type");
  type_opts(lee_t1);
  lee_t1->add_option("--alpha", alpha_text, "auto or a comma-separated list");
  lee_t1->add_option("--d", d_text, "auto or a comma-separated list");
  lee_t1->add_option("--t-max", t_max);
  lee_t1->add_option("--emit", emit_dir, "write <dir>/type<t>-a<alpha>-d<d>.{lat,poly}");
  lee_t1->add_flag("--perfection", with_perf, "append the perfection rank");
  lee_t1->add_flag("--all", all_rows, "also print (alpha, d) pairs where the slice is not a vertex subset");
  verb(lee_t1, [&] {
    IntVec v = leech_type_vector(type, vector_text);
    std::vector<long> alphas;
    std::vector<Integer> ds;
    if (alpha_text != "auto")
      for (const auto& a : split_ws(alpha_text)) alphas.push_back(static_cast<long>(parse_size(a, "alpha")));
    if (d_text != "auto")
      for (const auto& d : split_ws(d_text)) ds.emplace_back(static_cast<unsigned long>(parse_size(d, "d")));
    progress("loading minimal vectors");
    LeechContext ctx = LeechContext::build(g_opts.threads);
    MainDelaunayOptions o;
    o.threads = g_opts.threads;
    o.t_max = t_max;
    o.allow_large = g_opts.allow_large;
    auto records = table1(ctx, v, alphas, ds, o, progress);
    if (!emit_dir.empty()) fs::create_directories(emit_dir);
    for (const auto& r : records) {
      if (!r.contains_slice && !all_rows) continue;
      std::cout << format_record(r);
      if (with_perf) {
        if (r.N <= 20000 || g_opts.allow_large) std::cout << " perfrank=" << perfection_rank(r.cell, r.lattice.gram()).perfection_rank;
        else std::cout << " perfrank=skipped";
      }
      std::cout << '\n';
      if (!emit_dir.empty()) {
        std::string stem = "type" + r.vector_type.label() + "-a" + std::to_string(r.alpha) + "-d" + to_string(r.d);
        for (char& c : stem)
          if (c == '{' || c == '}' || c == ',') c = '_';
        std::ofstream lf(fs::path(emit_dir) / (stem + ".lat"));
        write_lattice(lf, r.lattice);
        std::ofstream pf(fs::path(emit_dir) / (stem + ".poly"));
        write_polytope(pf, r.cell, stem + ".lat");
      }
    }
  });

  auto* lee_smith = lee->add_subcommand("smith-check", "closest points of lambda23dual at a point");
  lee_smith->add_option("--point", point_text, "ambient sqrt(8)-scaled coordinates (default: the built-in 64-point center)");
  lee_smith->add_option("--samples", samples, "also sample this many random points");
  verb(lee_smith, [&] {
    IntVec v2 = leech_v2(leech());
    Lattice d23 = dual(orthogonal_section(leech(), v2));
    RatVec x = point_text.empty() ? lambda23_smith_point() : parse_vector(point_text);
    auto c = d23.coordinates(x);
    if (!c) throw PreconditionError("point is not orthogonal to v2 = (4,4,0^22)");
    Rational bound = covering_bound(leech(), v2);
    SmithPointReport r = check_smith_point(d23, *c, bound, g_opts.threads);
    std::cout << "bound " << to_string(bound) << "\ndist_sq " << to_string(r.dist_sq) << "\ncount " << r.count << "\nempty "
              << (r.empty ? "true" : "false") << "\nmeets_bound " << (r.meets_bound ? "true" : "false") << '\n';
    if (samples > 0) {
      Enumerator en(d23.gram());
      std::mt19937_64 rng(1);
      std::uniform_int_distribution<int> num(0, 255);
      Rational worst = 0;
      for (std::size_t k = 0; k < samples; ++k) {
        RatVec y(23);
        for (auto& q : y) q = make_rational(num(rng), 256);
        Rational d = en.closest(y).dist_sq;
        if (d > worst) worst = d;
      }
      std::cout << "samples " << samples << "\nsample_max_dist_sq " << to_string(worst) << "\nsamples_within_bound "
                << (worst <= bound ? "true" : "false") << '\n';
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  try {
    if (action) action();
    return 0;
  } catch (const PreconditionError& e) {
    std::cerr << "delone: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "delone: malformed input: " << e.what() << '\n';
    return 65;
  } catch (const IntegrityError& e) {
    std::cerr << "delone: internal consistency failure: " << e.what() << '\n';
    return 70;
  } catch (const std::exception& e) {
    std::cerr << "delone: " << e.what() << '\n';
    return 70;
  }
}
