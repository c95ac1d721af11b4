#include "delone/constructions/leech.hpp"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "delone/geometry/enumerate.hpp"
#include "delone/simd/kernels.hpp"

namespace delone {

namespace {

// Rows of a basis of sqrt(8) * Leech in Z^24 (standard coordinates built from the
// extended Golay code; regenerate with tools/gen/leech_basis.py).
constexpr int kLeechBasis[24][24] = {
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 5},
    {0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 2, 2, 2, 0, 0, 2, 0, 0, 2, 0},
    {0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 2, 0, 0, 2, 0, 2, 0, 2, 2},
    {0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 0, 2, 2, 2, 0, 2, 2, 0},
    {0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2, 0, 2, 2, 0, 0, 2},
    {0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2, 0, 2, 2, 0, 2},
    {0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2, 0, 2, 2, 2},
    {0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2, 0, 2, 2, 0, 2, 2, 2, 2, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2, 0, 2, 2, 0, 2, 2, 2, 2, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2, 0, 2, 2, 0, 2, 2, 2, 2, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 2, 0, 2, 2, 2, 0, 0, 0, 2, 2, 0, 2},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 2, 0, 2, 2, 2, 0, 0, 0, 2, 2, 2},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 4},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 4},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 4},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 4},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 4},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 4},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 4},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 4},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 4},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 8}};

}  // namespace

Lattice build_leech() {
  RatMatrix b(24, 24);
  for (std::size_t i = 0; i < 24; ++i)
    for (std::size_t j = 0; j < 24; ++j) b(i, j) = kLeechBasis[i][j];
  RatMatrix form(24, 24);
  for (std::size_t i = 0; i < 24; ++i) form(i, i) = Rational(1, 8);
  Lattice l(b, form);
  if (!l.is_integral() || !l.is_even() || l.squared_determinant() != 1)
    throw IntegrityError("embedded Leech basis failed verification");
  return l;
}

IntVec leech_vector(const Lattice& leech, const std::vector<int>& scaled) {
  RatVec x(scaled.begin(), scaled.end());
  auto c = leech.coordinates(x);
  if (!c) throw PreconditionError("vector outside the lattice span");
  IntVec out;
  for (const auto& q : *c) {
    if (q.get_den() != 1) throw PreconditionError("vector is not in the lattice");
    out.push_back(q.get_num());
  }
  return out;
}

namespace {

std::vector<int> ones_with(std::initializer_list<int> head) {
  std::vector<int> v(24, 1);
  std::copy(head.begin(), head.end(), v.begin());
  return v;
}

}  // namespace

IntVec leech_v2(const Lattice& leech) {
  std::vector<int> v(24, 0);
  v[0] = v[1] = 4;
  return leech_vector(leech, v);
}
IntVec leech_v3(const Lattice& leech) { return leech_vector(leech, ones_with({5})); }
IntVec leech_v5(const Lattice& leech) { return leech_vector(leech, ones_with({5, 5, -3})); }

std::uint64_t lattice_hash(const Lattice& l) {
  std::ostringstream s;
  write_lattice(s, l);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s.str()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

constexpr char kMagic[8] = {'D', 'L', 'N', 'M', 'I', 'N', '1', 0};

void put_u64(std::ostream& o, std::uint64_t x) {
  for (int i = 0; i < 8; ++i) o.put(static_cast<char>((x >> (8 * i)) & 0xff));
}
bool get_u64(std::istream& in, std::uint64_t* x) {
  *x = 0;
  for (int i = 0; i < 8; ++i) {
    int c = in.get();
    if (c == EOF) return false;
    *x |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * i);
  }
  return true;
}
void put_i32s(std::ostream& o, const std::vector<std::int32_t>& v) {
  for (auto x : v) {
    auto u = static_cast<std::uint32_t>(x);
    for (int i = 0; i < 4; ++i) o.put(static_cast<char>((u >> (8 * i)) & 0xff));
  }
}
bool get_i32s(std::istream& in, std::vector<std::int32_t>& v) {
  std::vector<unsigned char> buf(v.size() * 4);
  if (!in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()))) return false;
  for (std::size_t k = 0; k < v.size(); ++k) {
    std::uint32_t u = 0;
    for (int i = 0; i < 4; ++i) u |= static_cast<std::uint32_t>(buf[4 * k + i]) << (8 * i);
    v[k] = static_cast<std::int32_t>(u);
  }
  return true;
}

IntMatrix integer_basis(const Lattice& l) {
  IntMatrix b(l.rank(), l.ambient_dim());
  for (std::size_t i = 0; i < l.rank(); ++i)
    for (std::size_t j = 0; j < l.ambient_dim(); ++j) {
      const Rational& q = l.basis()(i, j);
      if (q.get_den() != 1) throw PreconditionError("minimal vector cache needs an integer basis");
      b(i, j) = q.get_num();
    }
  return b;
}

void fill_ambient(MinimalVectors& m, const IntMatrix& b) {
  const std::size_t n = m.dim, a = m.ambient_dim, count = m.count();
  m.ambient.assign(count * a, 0);
  for (std::size_t k = 0; k < count; ++k)
    for (std::size_t j = 0; j < a; ++j) {
      long s = 0;
      for (std::size_t i = 0; i < n; ++i) s += static_cast<long>(m.coords[k * n + i]) * b(i, j).get_si();
      m.ambient[k * a + j] = static_cast<std::int32_t>(s);
    }
}

}  // namespace

MinimalVectors minimal_vectors(const Lattice& l, std::size_t expect_count, unsigned threads) {
  IntMatrix b = integer_basis(l);
  for (const auto& e : b.data())
    if (abs(e) > 1024) throw PreconditionError("basis entries too large for the minimal vector cache");
  MinimalVectors m;
  m.dim = l.rank();
  m.ambient_dim = l.ambient_dim();
  const std::uint64_t hash = lattice_hash(l);
  std::filesystem::path path;
  if (const char* dir = std::getenv("DELONE_CACHE_DIR"); dir != nullptr && *dir != 0) {
    char name[64];
    std::snprintf(name, sizeof name, "min-%016llx.bin", static_cast<unsigned long long>(hash));
    path = std::filesystem::path(dir) / name;
    std::ifstream in(path, std::ios::binary);
    char magic[8];
    std::uint64_t h = 0, dim = 0, count = 0;
    if (in && in.read(magic, 8) && std::memcmp(magic, kMagic, 8) == 0 && get_u64(in, &h) && h == hash &&
        get_u64(in, &dim) && dim == m.dim && get_u64(in, &count)) {
      m.coords.resize(count * dim);
      if (get_i32s(in, m.coords) && (expect_count == 0 || count == expect_count)) {
        fill_ambient(m, b);
        return m;
      }
    }
    m.coords.clear();
  }

  ClosestPoints sv = Enumerator(l.gram()).shortest(threads);
  if (expect_count != 0 && sv.points.size() != expect_count)
    throw IntegrityError("minimal vector count " + std::to_string(sv.points.size()) + " differs from " +
                         std::to_string(expect_count));
  m.coords.assign(sv.points.data(), sv.points.data() + sv.points.size() * m.dim);
  fill_ambient(m, b);

  if (!path.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    auto tmp = path;
    tmp += ".tmp";
    std::ofstream out(tmp, std::ios::binary);
    if (out) {
      out.write(kMagic, 8);
      put_u64(out, hash);
      put_u64(out, m.dim);
      put_u64(out, m.count());
      put_i32s(out, m.coords);
      out.close();
      if (out) std::filesystem::rename(tmp, path, ec);
    }
  }
  return m;
}

std::vector<std::int64_t> inner_products_scaled(const MinimalVectors& m, const std::vector<std::int32_t>& v) {
  if (v.size() != m.ambient_dim) throw PreconditionError("ambient dimension mismatch");
  std::vector<std::int64_t> out(m.count());
  simd::active_kernels().gemv_i32(m.ambient.data(), m.count(), m.ambient_dim, v.data(), m.ambient_dim, out.data());
  return out;
}

}  // namespace delone
