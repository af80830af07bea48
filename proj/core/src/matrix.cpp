#include "regen/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace regen {

namespace {

void require_dims(bool ok, const std::string& what) {
  if (!ok) raise(ErrorCode::DimensionMismatch, what);
}

std::string dims(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Symbol> data)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(data)) {
  require_dims(data_.size() == rows * cols, "matrix data length does not match shape");
  for (auto x : data_) {
    if (!field_.contains(x)) {
      raise(ErrorCode::FieldMismatch, std::to_string(x) + " is not in " + field_.name());
    }
  }
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(Field field, std::initializer_list<std::initializer_list<Symbol>> rows) {
  std::vector<std::vector<Symbol>> copy;
  for (const auto& r : rows) copy.emplace_back(r);
  return from_rows(field, copy);
}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<Symbol>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<Symbol> data;
  data.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    require_dims(r.size() == cols, "ragged rows");
    data.insert(data.end(), r.begin(), r.end());
  }
  return Matrix(field, rows.size(), cols, std::move(data));
}

std::vector<Symbol> Matrix::column(std::size_t c) const {
  std::vector<Symbol> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Symbol x) { return x == 0; });
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r ? "; " : "");
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? " " : "") << (*this)(r, c);
  }
  out << ']';
  return out.str();
}

Matrix mul(const Matrix& a, const Matrix& b, OpCounter* counter) {
  require_same_field(a.field(), b.field());
  require_dims(a.cols() == b.rows(), "cannot multiply " + dims(a) + " by " + dims(b));
  const Field& f = a.field();
  Matrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t t = 0; t < a.cols(); ++t) {
      const Symbol x = a(i, t);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) = f.add(out(i, j), f.mul(x, b(t, j)));
      }
    }
  }
  const std::uint64_t cells = std::uint64_t{a.rows()} * b.cols();
  count_mul(counter, cells * a.cols());
  if (a.cols() > 0) count_add(counter, cells * (a.cols() - 1));
  return out;
}

std::vector<Symbol> mul(const Matrix& a, std::span<const Symbol> v, OpCounter* counter) {
  require_dims(a.cols() == v.size(), "cannot multiply " + dims(a) + " by vector of length " +
                                         std::to_string(v.size()));
  const Field& f = a.field();
  std::vector<Symbol> out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Symbol acc = 0;
    for (std::size_t t = 0; t < a.cols(); ++t) acc = f.add(acc, f.mul(a(i, t), v[t]));
    out[i] = acc;
  }
  count_mul(counter, std::uint64_t{a.rows()} * a.cols());
  if (a.cols() > 0) count_add(counter, std::uint64_t{a.rows()} * (a.cols() - 1));
  return out;
}

Matrix add(const Matrix& a, const Matrix& b, OpCounter* counter) {
  require_same_field(a.field(), b.field());
  require_dims(a.rows() == b.rows() && a.cols() == b.cols(),
               "cannot add " + dims(a) + " and " + dims(b));
  Matrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a.field().add(a(r, c), b(r, c));
  count_add(counter, std::uint64_t{a.rows()} * a.cols());
  return out;
}

Matrix sub(const Matrix& a, const Matrix& b, OpCounter* counter) {
  require_same_field(a.field(), b.field());
  require_dims(a.rows() == b.rows() && a.cols() == b.cols(),
               "cannot subtract " + dims(a) + " and " + dims(b));
  Matrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a.field().sub(a(r, c), b(r, c));
  count_add(counter, std::uint64_t{a.rows()} * a.cols());
  return out;
}

Matrix negate(const Matrix& a, OpCounter* counter) {
  Matrix out = a;
  if (a.field().characteristic_two()) return out;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a.field().neg(a(r, c));
  count_add(counter, std::uint64_t{a.rows()} * a.cols());
  return out;
}

Matrix inverse(const Matrix& a, OpCounter* counter) {
  require_dims(a.square(), "cannot invert non-square " + dims(a));
  const Field& f = a.field();
  const std::size_t n = a.rows();
  Matrix work = a;
  Matrix inv = Matrix::identity(f, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col) == 0) ++pivot;
    if (pivot == n) {
      raise(ErrorCode::SingularMatrix,
            "matrix is singular (no pivot in column " + std::to_string(col) + ")");
    }
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work(pivot, c), work(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const Symbol scale = f.inv(work(col, col));
    // Columns left of `col` are already zero in the pivot row of `work`.
    for (std::size_t c = col; c < n; ++c) work(col, c) = f.mul(work(col, c), scale);
    for (std::size_t c = 0; c < n; ++c) inv(col, c) = f.mul(inv(col, c), scale);
    count_mul(counter, 2 * n - col);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Symbol factor = work(r, col);
      if (factor == 0) continue;
      for (std::size_t c = col; c < n; ++c) work(r, c) = f.sub(work(r, c), f.mul(factor, work(col, c)));
      for (std::size_t c = 0; c < n; ++c) inv(r, c) = f.sub(inv(r, c), f.mul(factor, inv(col, c)));
      count_mul(counter, 2 * n - col);
      count_add(counter, 2 * n - col);
    }
  }
  return inv;
}

std::vector<Symbol> solve(const Matrix& a, std::span<const Symbol> b, OpCounter* counter) {
  require_dims(a.square() && a.rows() == b.size(), "solve: shape mismatch");
  const Field& f = a.field();
  const std::size_t n = a.rows();
  Matrix work = a;
  std::vector<Symbol> rhs(b.begin(), b.end());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col) == 0) ++pivot;
    if (pivot == n) {
      raise(ErrorCode::SingularMatrix,
            "system is singular (no pivot in column " + std::to_string(col) + ")");
    }
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(work(pivot, c), work(col, c));
      std::swap(rhs[pivot], rhs[col]);
    }
    const Symbol scale = f.inv(work(col, col));
    for (std::size_t c = col; c < n; ++c) work(col, c) = f.mul(work(col, c), scale);
    rhs[col] = f.mul(rhs[col], scale);
    count_mul(counter, n - col + 1);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Symbol factor = work(r, col);
      if (factor == 0) continue;
      for (std::size_t c = col; c < n; ++c) work(r, c) = f.sub(work(r, c), f.mul(factor, work(col, c)));
      rhs[r] = f.sub(rhs[r], f.mul(factor, rhs[col]));
      count_mul(counter, n - col + 1);
      count_add(counter, n - col + 1);
    }
  }
  return rhs;
}

bool is_invertible(const Matrix& a) {
  if (!a.square()) return false;
  try {
    inverse(a);
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SingularMatrix) return false;
    throw;
  }
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.field(), a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = a(r, c);
  return out;
}

Matrix submatrix_rows(const Matrix& a, std::span<const std::size_t> indices) {
  Matrix out(a.field(), indices.size(), a.cols());
  std::vector<bool> seen(a.rows(), false);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const std::size_t r = indices[i];
    if (r >= a.rows()) {
      raise(ErrorCode::IndexOutOfRange,
            "row " + std::to_string(r) + " out of range for " + dims(a));
    }
    if (seen[r]) raise(ErrorCode::DuplicateIndex, "row " + std::to_string(r) + " selected twice");
    seen[r] = true;
    std::copy(a.row(r).begin(), a.row(r).end(), out.row(i).begin());
  }
  return out;
}

Matrix submatrix_cols(const Matrix& a, std::size_t first, std::size_t count) {
  if (first + count > a.cols()) {
    raise(ErrorCode::IndexOutOfRange, "column range out of range for " + dims(a));
  }
  Matrix out(a.field(), a.rows(), count);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < count; ++c) out(r, c) = a(r, first + c);
  return out;
}

Matrix hconcat(const Matrix& left, const Matrix& right) {
  require_same_field(left.field(), right.field());
  require_dims(left.rows() == right.rows(), "hconcat: row counts differ");
  Matrix out(left.field(), left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < left.rows(); ++r) {
    for (std::size_t c = 0; c < left.cols(); ++c) out(r, c) = left(r, c);
    for (std::size_t c = 0; c < right.cols(); ++c) out(r, left.cols() + c) = right(r, c);
  }
  return out;
}

Matrix vconcat(const Matrix& top, const Matrix& bottom) {
  require_same_field(top.field(), bottom.field());
  require_dims(top.cols() == bottom.cols(), "vconcat: column counts differ");
  Matrix out(top.field(), top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r)
    std::copy(top.row(r).begin(), top.row(r).end(), out.row(r).begin());
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    std::copy(bottom.row(r).begin(), bottom.row(r).end(), out.row(top.rows() + r).begin());
  return out;
}

Matrix vandermonde(const Field& field, std::size_t k, std::span<const Symbol> points) {
  const std::size_t n = points.size();
  if (n > field.order()) {
    raise(ErrorCode::FieldTooSmall,
          std::to_string(n) + " points exceed " + field.name());
  }
  if (k > n) raise(ErrorCode::ParamsInvalid, "vandermonde needs k <= n");
  std::vector<Symbol> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    raise(ErrorCode::DuplicatePoints, "evaluation points are not distinct");
  }
  Matrix out(field, n, k);
  for (std::size_t i = 0; i < n; ++i) {
    if (!field.contains(points[i])) raise(ErrorCode::FieldMismatch, "point outside field");
    Symbol x = 1;
    for (std::size_t j = 0; j < k; ++j) {
      out(i, j) = x;
      x = field.mul(x, points[i]);
    }
  }
  return out;
}

Matrix extended_vandermonde(const Field& field, std::size_t n, std::size_t k) {
  if (k == 0 || k > n) raise(ErrorCode::ParamsInvalid, "extended Vandermonde needs 1 <= k <= n");
  if (n > field.order() + 1) {
    raise(ErrorCode::FieldTooSmall, "doubly extended RS code of length " + std::to_string(n) +
                                        " needs q+1 >= n, have " + field.name());
  }
  const bool doubly = n == field.order() + 1;
  const std::size_t interior = doubly ? n - 2 : n - 1;
  Matrix out(field, n, k);
  out(0, 0) = 1;
  // Nonzero points only. There may be fewer of them than k columns.
  const auto points = field.enumerate(interior);
  for (std::size_t r = 0; r < interior; ++r) {
    Symbol x = 1;
    for (std::size_t j = 0; j < k; ++j) {
      out(r + 1, j) = x;
      x = field.mul(x, points[r]);
    }
  }
  if (doubly) out(n - 1, k - 1) = 1;
  return out;
}

Matrix congruence(const Matrix& p, const Matrix& m, OpCounter* counter) {
  require_dims(p.square() && m.square() && p.rows() == m.rows(),
               "congruence needs square matrices of equal size, got " + dims(p) + " and " +
                   dims(m));
  return mul(mul(p, m, counter), transpose(p), counter);
}

bool is_symmetric(const Matrix& a) {
  if (!a.square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (a(i, j) != a(j, i)) return false;
  return true;
}

bool is_skew_symmetric(const Matrix& a) {
  if (!a.square()) return false;
  const Field& f = a.field();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (a(i, i) != 0) return false;
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (a(i, j) != f.neg(a(j, i))) return false;
  }
  return true;
}

SkewSymmetric::SkewSymmetric(Matrix m) : m_(std::move(m)) {
  if (!is_skew_symmetric(m_)) raise(ErrorCode::NotSkewSymmetric, "matrix is not skew-symmetric");
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t size) {
  std::vector<std::vector<std::size_t>> out;
  if (size > n) return out;
  std::vector<std::size_t> pick(size);
  for (std::size_t i = 0; i < size; ++i) pick[i] = i;
  while (true) {
    out.push_back(pick);
    std::size_t i = size;
    while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace regen
