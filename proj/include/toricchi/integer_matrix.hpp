#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <vector>

namespace toricchi {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                                 std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntegerMatrix transposed() const;
  /// The submatrix on the given rows and columns, in the given order.
  IntegerMatrix select(const std::vector<int>& row_idx,
                       const std::vector<int>& col_idx) const;

  std::vector<Integer> apply(const std::vector<Integer>& x) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b);
  friend std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Rank over the rationals, by fraction-free (Bareiss) elimination.
std::size_t rank(IntegerMatrix m);

/// Determinant of a square matrix, by Bareiss elimination.
Integer determinant(IntegerMatrix m);

/// Solves the square system M x = b over the rationals. Returns false when M
/// is singular.
bool solve_rational(const IntegerMatrix& m, const std::vector<Integer>& b,
                    std::vector<Rational>& x);

/// Floor and ceiling of a rational as integers.
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

}  // namespace toricchi
