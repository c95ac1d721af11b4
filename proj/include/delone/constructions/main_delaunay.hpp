#pragma once

#include <functional>
#include <optional>

#include "delone/constructions/classify.hpp"
#include "delone/constructions/leech.hpp"
#include "delone/geometry/delaunay.hpp"

namespace delone {

/// The Leech lattice together with its 196560 minimal vectors.
struct LeechContext {
  Lattice leech;
  MinimalVectors min;
  static LeechContext build(unsigned threads = 1);
};

struct MainDelaunayOptions {
  unsigned threads = 1;
  std::size_t t_max = 11;              // design strength cap
  std::size_t strength_limit = 60000;  // skip the pair sums above this many vertices
  bool allow_large = false;            // lifts strength_limit
};

struct MainDelaunayRecord {
  LeechVectorType vector_type;
  long alpha = 0;
  Integer d;
  std::size_t slice_size = 0;  // |Min_{alpha,v}|
  std::size_t N = 0;
  Integer den;
  std::optional<std::size_t> s;
  Integer ind;
  std::size_t affine_dim = 0;
  bool full_dimensional = false;
  bool contains_slice = false;  // translated slice is a subset of the vertices
  bool empty_sphere = false;    // independent emptiness certificate
  bool verified = false;
  Lattice lattice;    // glue(L(v), d), or the section by the slice's span when lower-dimensional
  DelaunayCell cell;  // lattice coordinates
  PointSet slice;     // translated slice in the same coordinates
};

/// Indices of the minimal vectors x with <x, v> = alpha.
std::vector<std::size_t> slice_rows(const LeechContext& ctx, const IntVec& v, long alpha);

/// Slice {x in Min : <x, v> = alpha} translated into L(v) and embedded into
/// glue(L(v), d); the Delaunay cell of its circumcenter is recomputed there.
MainDelaunayRecord main_delaunay(const LeechContext& ctx, const IntVec& v, long alpha, const Integer& d,
                                 const MainDelaunayOptions& opts = {});

/// Every alpha in 1..|v|^2/2 with a nonempty slice and every divisor d of |v|^2,
/// ordered by (alpha, d). `alphas` / `ds` restrict the sweep when nonempty.
std::vector<MainDelaunayRecord> table1(const LeechContext& ctx, const IntVec& v, const std::vector<long>& alphas,
                                       const std::vector<Integer>& ds, const MainDelaunayOptions& opts = {},
                                       const std::function<void(const std::string&)>& progress = {});

/// type=<t> d=<d> N=<N> den=<den> s=<s> ind=<ind> verified=<bool> (plus alpha and dim fields).
std::string format_record(const MainDelaunayRecord& r);

}  // namespace delone
