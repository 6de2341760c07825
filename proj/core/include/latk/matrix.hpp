#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "latk/integer.hpp"

namespace latk {

using IntegerVector = std::vector<Integer>;

/// Dense row-major matrix of exact integers. Rows are vectors of the ambient
/// space throughout the library.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::initializer_list<std::initializer_list<Integer>> rows);

  static IntegerMatrix identity(std::size_t n);
  /// `cols` is needed to give an empty row list a width.
  static IntegerMatrix from_rows(const std::vector<IntegerVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Integer> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  IntegerVector row_vector(std::size_t r) const;
  std::vector<IntegerVector> row_vectors() const;

  void append_row(std::span<const Integer> v);
  void append_rows(const IntegerMatrix& other);
  void remove_row(std::size_t r);
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  IntegerMatrix transpose() const;
  IntegerMatrix select_rows(std::span<const std::size_t> indices) const;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
/// Row vector times matrix.
IntegerVector operator*(std::span<const Integer> v, const IntegerMatrix& m);
/// Matrix times column vector.
IntegerVector operator*(const IntegerMatrix& m, std::span<const Integer> v);

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m);

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
IntegerVector add(std::span<const Integer> a, std::span<const Integer> b);
IntegerVector subtract(std::span<const Integer> a, std::span<const Integer> b);
IntegerVector scale(std::span<const Integer> a, const Integer& factor);
bool is_zero(std::span<const Integer> v);
/// gcd of all entries (0 for the zero vector).
Integer content(std::span<const Integer> v);
/// Divides by the content; the zero vector is returned unchanged.
IntegerVector make_primitive(std::span<const Integer> v);
IntegerVector unit_vector(std::size_t dim, std::size_t i);
/// Lexicographic comparison of equal-length vectors.
bool lex_less(std::span<const Integer> a, std::span<const Integer> b);

std::size_t rank(const IntegerMatrix& m);
/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntegerMatrix& m);
/// Adjugate of a square matrix: adj(M) * M = det(M) * I.
IntegerMatrix adjugate(const IntegerMatrix& m);

/// Solves x * m = b (x a row vector) over the rationals. Returns false if the
/// system is inconsistent. When the solution is not unique an arbitrary one is
/// returned.
bool solve_left_rational(const IntegerMatrix& m, std::span<const Integer> b,
                         std::vector<Rational>& x);

/// Indices of a maximal linearly independent subset of rows, chosen greedily
/// in row order.
std::vector<std::size_t> independent_rows(const IntegerMatrix& m);

}  // namespace latk
