#pragma once

#include "coxcanon/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace coxcanon {

/// Dense matrix of arbitrary-precision integers, row-major.
/// Dimensions are fixed at construction; entries are mutable.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(const std::vector<IntVec>& columns);
  static IntMatrix from_rows(const std::vector<IntVec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  IntVec row(std::size_t r) const;
  IntVec col(std::size_t c) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row a += k * row b
  void add_row_multiple(std::size_t a, std::size_t b, const Integer& k);
  /// col a += k * col b
  void add_col_multiple(std::size_t a, std::size_t b, const Integer& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  IntMatrix transposed() const;

  bool operator==(const IntMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVec operator*(const IntMatrix& a, const IntVec& x);

/// Exact determinant by fraction-free (Bareiss) elimination. Square input.
Integer determinant(const IntMatrix& a);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace coxcanon
