#pragma once

/**
 * @file gfp.hpp
 * @brief Dense linear algebra over the prime field GF(p), p < 256.
 *
 * Entries are stored as bytes in row-major order. Elimination uses a
 * multiplication table per prime; rank() has a packed 64-bit word path for
 * p = 2.
 */

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace verlinde::gfp {

using Element = std::uint8_t;
using Vector = std::vector<Element>;

/// Arithmetic tables for one prime.
class Field {
 public:
  static const Field& get(int p);

  int p() const { return p_; }
  Element add(Element a, Element b) const { return add_[a * p_ + b]; }
  Element sub(Element a, Element b) const { return add_[a * p_ + neg_[b]]; }
  Element mul(Element a, Element b) const { return mul_[a * p_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  Element inv(Element a) const;
  Element from_int(long long v) const;
  /// Row of the multiplication table for `c`: row[x] = c*x.
  const Element* mul_row(Element c) const { return &mul_[c * p_]; }

 private:
  explicit Field(int p);

  int p_;
  std::vector<Element> add_;
  std::vector<Element> mul_;
  std::vector<Element> neg_;
  std::vector<Element> inv_;
};

/// dst += c * src (entrywise, mod p).
void axpy(const Field& f, Element c, std::span<const Element> src, std::span<Element> dst);

class Matrix {
 public:
  Matrix() = default;
  Matrix(int p, std::size_t rows, std::size_t cols);
  Matrix(int p, std::size_t rows, std::size_t cols, const std::vector<long long>& row_major);

  static Matrix identity(int p, std::size_t n);
  static Matrix from_rows(int p, const std::vector<Vector>& rows, std::size_t cols);

  int p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Element operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;

  bool is_zero() const;
  Matrix transpose() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  int p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, std::span<const Element> v);

Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& a, std::size_t exponent);
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// Rank by Gaussian elimination; packed bitset elimination when p = 2.
std::size_t rank(const Matrix& m);
/// Rank by the generic byte path regardless of p (used to cross-check the p = 2 path).
std::size_t rank_generic(const Matrix& m);

/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);

/// Basis of {x : m x = 0}, one basis vector per row.
Matrix kernel(const Matrix& m);
/// Basis of {y : y m = 0}, one basis vector per row.
Matrix left_kernel(const Matrix& m);
/// Inverse of a square matrix; throws InvalidArgument when singular.
Matrix inverse(const Matrix& m);

/// Compressed view of the non-zero entries of a matrix, for repeated mat-vec.
class SparseRows {
 public:
  explicit SparseRows(const Matrix& m);
  std::size_t rows() const { return offsets_.size() - 1; }
  void apply(const Field& f, std::span<const Element> x, std::span<Element> y) const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> cols_;
  std::vector<Element> values_;
};

/**
 * Incrementally built subspace of GF(p)^n kept in reduced row echelon form.
 *
 * Because rows are fully reduced, the coordinates of a vector lying in the
 * span are its entries at the pivot columns.
 */
class EchelonBasis {
 public:
  EchelonBasis(int p, std::size_t ambient_dim);

  int p() const { return field_->p(); }
  std::size_t ambient_dim() const { return n_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Reduces v modulo the span in place; v becomes zero iff it was in the span.
  void reduce(Vector& v) const;
  /// Adds v to the span; returns false when v was already in it.
  bool insert(Vector v);
  bool contains(Vector v) const;
  /// Coordinates of v (which must lie in the span) with respect to rows().
  Vector coordinates(std::span<const Element> v) const;
  /// Non-pivot columns: a complement basis of standard vectors for quotients.
  std::vector<std::size_t> free_columns() const;

  Matrix as_matrix() const;

 private:
  const Field* field_;
  std::size_t n_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::int64_t> pivot_row_;  // column -> row index or -1
};

std::string to_string(const Matrix& m);

}  // namespace verlinde::gfp
