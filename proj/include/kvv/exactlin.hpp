#pragma once

// Exact integer and rational linear algebra. Nothing in the library ever
// touches floating point; every quantity is an mpz/mpq value.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kvv/errors.hpp"

namespace kvv {

using Integer = mpz_class;
using Rational = mpq_class;  // canonical (lowest terms, positive denominator)
using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Accepts "p", "-p", "p/q"; the result is canonicalized. Throws DomainError.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

Rational make_rational(long num, long den = 1);

Integer floor(const Rational& value);
bool is_integral(const Rational& value);

/// Dense row-major matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw DimensionError("matrix entry count does not match dimensions");
    }
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw DimensionError("ragged matrix literal");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  const std::vector<T>& entries() const { return entries_; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Leading principal k x k block.
  Matrix leading(std::size_t k) const {
    Matrix m(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) m(r, c) = (*this)(r, c);
    return m;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = r + 1; c < cols_; ++c)
        if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product dimension mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
      }
    return p;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& x) {
    if (a.cols_ != x.size()) throw DimensionError("matrix-vector dimension mismatch");
    std::vector<T> y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) y[i] += a(i, k) * x[k];
    return y;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

RationalMatrix to_rational(const IntMatrix& m);

/// U * M * V = D with U, V unimodular and D in Smith normal form.
struct SnfDecomposition {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;

  /// Diagonal of D (length min(rows, cols)).
  IntVector invariant_factors() const;
};

/// Unique x with G x = b. Throws SingularMatrixError when G is singular.
RationalVector solve_linear(const RationalMatrix& g, const RationalVector& b);

RationalMatrix inverse(const RationalMatrix& g);

Rational determinant(const RationalMatrix& g);
Integer determinant(const IntMatrix& g);

std::size_t rank(const RationalMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Smith normal form. Pivots on the entry of smallest absolute value; the
/// diagonal is nonnegative and each entry divides the next.
SnfDecomposition smith_normal_form(const IntMatrix& m);

/// Sylvester's criterion: the k-th leading principal minor has sign (-1)^k.
/// Throws DomainError for non-symmetric input. The empty matrix is negative
/// definite.
bool is_negative_definite(const RationalMatrix& g);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Inertia of a symmetric matrix via congruence diagonalization over Q.
Inertia inertia(const RationalMatrix& g);

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace kvv
