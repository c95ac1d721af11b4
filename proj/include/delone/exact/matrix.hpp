#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "delone/exact/rational.hpp"

namespace delone {

/// Dense row-major matrix over an exact scalar type.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : init) {
      if (r.size() != cols_) throw PreconditionError("ragged matrix initializer");
      for (const auto& x : r) data_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows[0].size();
    m.data_.reserve(m.rows_ * m.cols_);
    for (const auto& r : rows) {
      if (r.size() != m.cols_) throw PreconditionError("ragged matrix rows");
      m.data_.insert(m.data_.end(), r.begin(), r.end());
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<T> row_vec(std::size_t i) const { return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_}; }
  std::vector<T> col_vec(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  void append_row(std::span<const T> r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw PreconditionError("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_, data_.begin() + b * cols_);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix rows_range(std::size_t begin, std::size_t end) const {
    Matrix m(end - begin, cols_);
    std::copy(data_.begin() + begin * cols_, data_.begin() + end * cols_, m.data_.begin());
    return m;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == 0; });
  }

  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw PreconditionError("matrix product dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("matrix sum dimension mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
  }

  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using IntMatrix = Matrix<Integer>;

RatMatrix to_rational(const IntMatrix& m);
/// Returns the integer matrix and the common denominator d with m = result / d.
IntMatrix clear_denominators(const RatMatrix& m, Integer* denominator);
/// Exact conversion; throws if an entry is not integral.
IntMatrix to_integer(const RatMatrix& m);
bool is_integral(const RatMatrix& m);

RatVec row_times(const RatVec& v, const RatMatrix& m);  // v^T M
RatVec times_col(const RatMatrix& m, const RatVec& v);  // M v
IntVec row_times(const IntVec& v, const IntMatrix& m);
Rational dot(const RatVec& a, const RatVec& b);
Rational bilinear(const RatVec& a, const RatMatrix& g, const RatVec& b);  // a^T G b

Rational determinant(const RatMatrix& m);
Integer determinant(const IntMatrix& m);  // fraction-free Bareiss
RatMatrix inverse(const RatMatrix& m);
/// Solves x A = b for x (A square, invertible).
RatVec solve_left(const RatMatrix& a, const RatVec& b);

/// LDL^T with unit upper R: G = R^T diag(D) R. Returns false when G is not positive definite.
bool ldl_upper(const RatMatrix& gram, RatMatrix* r, RatVec* d);
bool is_positive_definite(const RatMatrix& gram);

/// Integer points stored as a flat block of fixed-dimension int32 coordinates.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return dim_ == 0 ? count_ : data_.size() / dim_; }
  bool empty() const { return size() == 0; }

  std::span<const std::int32_t> operator[](std::size_t i) const { return {data_.data() + i * dim_, dim_}; }
  std::span<std::int32_t> mutable_row(std::size_t i) { return {data_.data() + i * dim_, dim_}; }
  const std::int32_t* data() const { return data_.data(); }

  void push_back(std::span<const std::int32_t> p);
  void push_back(const IntVec& p);
  void reserve(std::size_t n) { data_.reserve(n * dim_); }
  void clear() {
    data_.clear();
    count_ = 0;
  }

  /// Lexicographic sort and deduplication.
  void sort_unique();
  /// Binary search; requires sorted.
  bool contains(std::span<const std::int32_t> p) const;
  IntVec to_int_vec(std::size_t i) const;
  RatVec to_rat_vec(std::size_t i) const;

  friend bool operator==(const PointSet& a, const PointSet& b) { return a.dim_ == b.dim_ && a.data_ == b.data_ && a.count_ == b.count_; }

 private:
  std::size_t dim_ = 0;
  std::size_t count_ = 0;  // only used when dim_ == 0 (rank-0 lattices)
  std::vector<std::int32_t> data_;
};

std::int32_t checked_int32(const Integer& z);

}  // namespace delone
