#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "regen/counter.hpp"
#include "regen/gf.hpp"

namespace regen {

/// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Symbol> data);

  static Matrix identity(Field field, std::size_t n);
  static Matrix from_rows(Field field, std::initializer_list<std::initializer_list<Symbol>> rows);
  static Matrix from_rows(Field field, const std::vector<std::vector<Symbol>>& rows);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Symbol& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  Symbol operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::span<Symbol> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const Symbol> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<Symbol> column(std::size_t c) const;

  std::span<const Symbol> data() const noexcept { return data_; }

  bool is_zero() const noexcept;
  std::string to_string() const;

  friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Symbol> data_;
};

/// A x B. Counts rows*cols*inner multiplications.
Matrix mul(const Matrix& a, const Matrix& b, OpCounter* counter = nullptr);
/// A x v for a column vector v.
std::vector<Symbol> mul(const Matrix& a, std::span<const Symbol> v, OpCounter* counter = nullptr);
Matrix add(const Matrix& a, const Matrix& b, OpCounter* counter = nullptr);
Matrix sub(const Matrix& a, const Matrix& b, OpCounter* counter = nullptr);
Matrix negate(const Matrix& a, OpCounter* counter = nullptr);

/// Gauss-Jordan inverse; the pivot is the first nonzero entry of each column.
Matrix inverse(const Matrix& a, OpCounter* counter = nullptr);
/// Solves A x = b for square non-singular A.
std::vector<Symbol> solve(const Matrix& a, std::span<const Symbol> b, OpCounter* counter = nullptr);
bool is_invertible(const Matrix& a);

Matrix transpose(const Matrix& a);
Matrix submatrix_rows(const Matrix& a, std::span<const std::size_t> indices);
Matrix submatrix_cols(const Matrix& a, std::size_t first, std::size_t count);
Matrix hconcat(const Matrix& left, const Matrix& right);
Matrix vconcat(const Matrix& top, const Matrix& bottom);

/// entry [i,j] = points[i]^j, j < k.
Matrix vandermonde(const Field& field, std::size_t k, std::span<const Symbol> points);
/// Generator of the doubly extended RS code: e_1 (the point 0), Vandermonde
/// rows on nonzero points, and e_k (the point at infinity) when n = q+1.
Matrix extended_vandermonde(const Field& field, std::size_t n, std::size_t k);

/// P M P^t.
Matrix congruence(const Matrix& p, const Matrix& m, OpCounter* counter = nullptr);

bool is_symmetric(const Matrix& a);
/// Square, A[i,j] = -A[j,i] and A[i,i] = 0. The diagonal is checked
/// explicitly since characteristic two does not force it.
bool is_skew_symmetric(const Matrix& a);

/// A FieldMatrix known to be skew-symmetric.
class SkewSymmetric {
 public:
  explicit SkewSymmetric(Matrix m);

  const Matrix& matrix() const noexcept { return m_; }
  std::size_t size() const noexcept { return m_.rows(); }

 private:
  Matrix m_;
};

/// Every `size`-subset of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t size);

}  // namespace regen
