#include "coxcanon/int_matrix.hpp"

#include <ostream>
#include <utility>

namespace coxcanon {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged initializer for IntMatrix");
    for (auto v : r) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& columns) {
  if (columns.empty()) return IntMatrix(0, 0);
  const std::size_t rows = columns.front().size();
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionMismatch("ragged column list");
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = columns[c][r];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
  if (rows.empty()) return IntMatrix(0, 0);
  const std::size_t cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged row list");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

IntVec IntMatrix::row(std::size_t r) const {
  IntVec out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

IntVec IntMatrix::col(std::size_t c) const {
  IntVec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
}

void IntMatrix::add_row_multiple(std::size_t a, std::size_t b, const Integer& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) at(a, c) += k * at(b, c);
}

void IntMatrix::add_col_multiple(std::size_t a, std::size_t b, const Integer& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) at(r, a) += k * at(r, b);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) at(r, c) = -at(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, c) = -at(r, c);
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

IntVec operator*(const IntMatrix& a, const IntVec& x) {
  if (a.cols() != x.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  IntVec out(a.rows(), Integer(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a.at(i, j) * x[j];
  return out;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m.at(i, j) = (m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j)) / prev;
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r == 0 ? "[" : " ");
    for (std::size_t c = 0; c < m.cols(); ++c) {
      os << m.at(r, c);
      if (c + 1 < m.cols()) os << ' ';
    }
    os << (r + 1 == m.rows() ? "]" : "\n");
  }
  return os;
}

}  // namespace coxcanon
