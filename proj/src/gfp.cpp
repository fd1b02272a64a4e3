#include "verlinde/gfp.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <sstream>

#include "verlinde/config.hpp"
#include "verlinde/errors.hpp"

namespace verlinde::gfp {

Field::Field(int p) : p_(p) {
  const auto n = static_cast<std::size_t>(p);
  add_.resize(n * n);
  mul_.resize(n * n);
  neg_.resize(n);
  inv_.assign(n, 0);
  for (int a = 0; a < p; ++a) {
    neg_[a] = static_cast<Element>((p - a) % p);
    for (int b = 0; b < p; ++b) {
      add_[a * p + b] = static_cast<Element>((a + b) % p);
      mul_[a * p + b] = static_cast<Element>((a * b) % p);
      if ((a * b) % p == 1) inv_[a] = static_cast<Element>(b);
    }
  }
}

const Field& Field::get(int p) {
  static std::array<std::unique_ptr<Field>, 256> fields;
  static std::mutex mutex;
  require_small_prime(p);
  std::lock_guard lock(mutex);
  if (!fields[p]) fields[p].reset(new Field(p));
  return *fields[p];
}

Element Field::inv(Element a) const {
  if (a == 0) throw InvalidArgument("GF(p): inverse of zero");
  return inv_[a];
}

Element Field::from_int(long long v) const {
  long long r = v % p_;
  if (r < 0) r += p_;
  return static_cast<Element>(r);
}

void axpy(const Field& f, Element c, std::span<const Element> src, std::span<Element> dst) {
  if (c == 0) return;
  const int p = f.p();
  if (p == 2) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
    return;
  }
  const Element* row = f.mul_row(c);
  for (std::size_t i = 0; i < dst.size(); ++i) {
    unsigned s = static_cast<unsigned>(dst[i]) + row[src[i]];
    dst[i] = static_cast<Element>(s >= static_cast<unsigned>(p) ? s - p : s);
  }
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(int p, std::size_t rows, std::size_t cols) : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  require_small_prime(p);
}

Matrix::Matrix(int p, std::size_t rows, std::size_t cols, const std::vector<long long>& row_major)
    : Matrix(p, rows, cols) {
  if (row_major.size() != rows * cols) throw InvalidArgument("matrix entry count does not match shape");
  const Field& f = Field::get(p);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = f.from_int(row_major[i]);
}

Matrix Matrix::identity(int p, std::size_t n) {
  Matrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(int p, const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidArgument("from_rows: ragged rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Element e) { return e == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (a.p() != b.p()) throw InvalidArgument("matrices over different primes");
}

}  // namespace

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) throw InvalidArgument("matrix product: shape mismatch");
  const Field& f = Field::get(a.p());
  Matrix c(a.p(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Element s = a(i, k);
      if (s != 0) axpy(f, s, b.row(k), out);
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("matrix sum: shape mismatch");
  const Field& f = Field::get(a.p());
  Matrix c = a;
  for (std::size_t r = 0; r < a.rows(); ++r) axpy(f, 1, b.row(r), c.row(r));
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("matrix difference: shape mismatch");
  const Field& f = Field::get(a.p());
  Matrix c = a;
  for (std::size_t r = 0; r < a.rows(); ++r) axpy(f, f.neg(1), b.row(r), c.row(r));
  return c;
}

Vector operator*(const Matrix& a, std::span<const Element> v) {
  if (v.size() != a.cols()) throw InvalidArgument("matrix-vector product: shape mismatch");
  const Field& f = Field::get(a.p());
  Vector out(a.rows(), 0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    unsigned acc = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      acc += static_cast<unsigned>(a(r, c)) * v[c];
      if (acc >= (1U << 24)) acc %= static_cast<unsigned>(f.p());
    }
    out[r] = static_cast<Element>(acc % static_cast<unsigned>(f.p()));
  }
  return out;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  const Field& f = Field::get(a.p());
  Matrix k(a.p(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Element s = a(i, j);
      if (s == 0) continue;
      for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
          k(i * b.rows() + r, j * b.cols() + c) = f.mul(s, b(r, c));
        }
      }
    }
  }
  return k;
}

Matrix power(const Matrix& a, std::size_t exponent) {
  if (!a.is_square()) throw InvalidArgument("matrix power: not square");
  Matrix result = Matrix::identity(a.p(), a.rows());
  Matrix base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  Matrix m(a.p(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Elimination

std::vector<std::size_t> rref(Matrix& m) {
  const Field& f = Field::get(m.p());
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  Vector scratch(m.cols());
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row) {
      auto a = m.row(pivot);
      auto b = m.row(lead_row);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    Element scale = f.inv(m(lead_row, col));
    if (scale != 1) {
      for (auto& e : m.row(lead_row)) e = f.mul(e, scale);
    }
    auto lead = m.row(lead_row);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row) continue;
      Element e = m(r, col);
      if (e != 0) axpy(f, f.neg(e), lead, m.row(r));
    }
    pivots.push_back(col);
    ++lead_row;
  }
  return pivots;
}

std::size_t rank_generic(const Matrix& m) {
  Matrix copy = m;
  return rref(copy).size();
}

namespace {

std::size_t rank_gf2(const Matrix& m) {
  const std::size_t words = (m.cols() + 63) / 64;
  std::vector<std::uint64_t> bits(m.rows() * words, 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) & 1U) bits[r * words + c / 64] |= std::uint64_t{1} << (c % 64);
    }
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t mask = std::uint64_t{1} << (col % 64);
    std::size_t pivot = rank;
    while (pivot < m.rows() && !(bits[pivot * words + w] & mask)) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      std::swap_ranges(bits.begin() + pivot * words, bits.begin() + (pivot + 1) * words, bits.begin() + rank * words);
    }
    const std::uint64_t* lead = &bits[rank * words];
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      std::uint64_t* row = &bits[r * words];
      if (row[w] & mask) {
        for (std::size_t k = w; k < words; ++k) row[k] ^= lead[k];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  if (m.p() == 2) return rank_gf2(m);
  return rank_generic(m);
}

Matrix kernel(const Matrix& m) {
  const Field& f = Field::get(m.p());
  Matrix reduced = m;
  auto pivots = rref(reduced);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector x(m.cols(), 0);
    x[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = f.neg(reduced(k, free));
    basis.push_back(std::move(x));
  }
  return Matrix::from_rows(m.p(), basis, m.cols());
}

Matrix left_kernel(const Matrix& m) { return kernel(m.transpose()); }

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw InvalidArgument("inverse: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return Matrix(m.p(), 0, 0);
  Matrix aug(m.p(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw InvalidArgument("inverse: matrix is singular");
  Matrix inv(m.p(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  }
  return inv;
}

// ---------------------------------------------------------------------------
// SparseRows

SparseRows::SparseRows(const Matrix& m) {
  offsets_.reserve(m.rows() + 1);
  offsets_.push_back(0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) != 0) {
        cols_.push_back(static_cast<std::uint32_t>(c));
        values_.push_back(m(r, c));
      }
    }
    offsets_.push_back(cols_.size());
  }
}

void SparseRows::apply(const Field& f, std::span<const Element> x, std::span<Element> y) const {
  const auto p = static_cast<unsigned>(f.p());
  for (std::size_t r = 0; r + 1 < offsets_.size(); ++r) {
    unsigned acc = 0;
    for (std::size_t k = offsets_[r]; k < offsets_[r + 1]; ++k) {
      acc += static_cast<unsigned>(values_[k]) * x[cols_[k]];
      if (acc >= (1U << 24)) acc %= p;
    }
    y[r] = static_cast<Element>(acc % p);
  }
}

// ---------------------------------------------------------------------------
// EchelonBasis

EchelonBasis::EchelonBasis(int p, std::size_t ambient_dim)
    : field_(&Field::get(p)), n_(ambient_dim), pivot_row_(ambient_dim, -1) {}

void EchelonBasis::reduce(Vector& v) const {
  if (v.size() != n_) throw InvalidArgument("EchelonBasis: vector has wrong length");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Element e = v[pivots_[k]];
    if (e != 0) axpy(*field_, field_->neg(e), rows_[k], v);
  }
}

bool EchelonBasis::insert(Vector v) {
  reduce(v);
  auto it = std::find_if(v.begin(), v.end(), [](Element e) { return e != 0; });
  if (it == v.end()) return false;
  const auto col = static_cast<std::size_t>(it - v.begin());
  Element scale = field_->inv(*it);
  if (scale != 1) {
    for (auto& e : v) e = field_->mul(e, scale);
  }
  for (auto& row : rows_) {
    Element e = row[col];
    if (e != 0) axpy(*field_, field_->neg(e), v, row);
  }
  pivot_row_[col] = static_cast<std::int64_t>(rows_.size());
  pivots_.push_back(col);
  rows_.push_back(std::move(v));
  return true;
}

bool EchelonBasis::contains(Vector v) const {
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](Element e) { return e == 0; });
}

Vector EchelonBasis::coordinates(std::span<const Element> v) const {
  Vector coords(rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) coords[k] = v[pivots_[k]];
  return coords;
}

std::vector<std::size_t> EchelonBasis::free_columns() const {
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n_; ++c) {
    if (pivot_row_[c] < 0) free.push_back(c);
  }
  return free;
}

Matrix EchelonBasis::as_matrix() const { return Matrix::from_rows(p(), rows_, n_); }

std::string to_string(const Matrix& m) {
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << static_cast<int>(m(r, c));
    out << "]\n";
  }
  return out.str();
}

}  // namespace verlinde::gfp
