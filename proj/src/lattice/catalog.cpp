#include "delone/lattice/catalog.hpp"

namespace delone {

namespace {

RatMatrix cartan_from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  RatMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) g(i, i) = 2;
  for (auto [a, b] : edges) g(a, b) = g(b, a) = -1;
  return g;
}

}  // namespace

Lattice lattice_zn(std::size_t n) {
  if (n == 0) throw PreconditionError("Z^n needs n >= 1");
  return Lattice(RatMatrix::identity(n));
}

Lattice lattice_an(std::size_t n) {
  if (n == 0) throw PreconditionError("A_n needs n >= 1");
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Lattice::from_gram(cartan_from_edges(n, e));
}

Lattice lattice_dn(std::size_t n) {
  if (n < 3) throw PreconditionError("D_n needs n >= 3");
  // chain 0-1-...-(n-2) with node n-1 attached to n-3
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 2 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(n - 3, n - 1);
  return Lattice::from_gram(cartan_from_edges(n, e));
}

Lattice lattice_e(std::size_t n) {
  if (n < 6 || n > 8) throw PreconditionError("E_n exists for n = 6, 7, 8");
  // chain 0-1-...-(n-2), node n-1 attached to node 2
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 2 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(2, n - 1);
  return Lattice::from_gram(cartan_from_edges(n, e));
}

}  // namespace delone
