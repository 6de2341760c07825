#include "latk/matrix.hpp"

#include <algorithm>
#include <ostream>

#include "latk/error.hpp"

namespace latk {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<Integer>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::InvalidInput, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<IntegerVector>& rows, std::size_t cols) {
  IntegerMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

IntegerVector IntegerMatrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return {s.begin(), s.end()};
}

std::vector<IntegerVector> IntegerMatrix::row_vectors() const {
  std::vector<IntegerVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
  return out;
}

void IntegerMatrix::append_row(std::span<const Integer> v) {
  if (rows_ == 0 && cols_ == 0) cols_ = v.size();
  if (v.size() != cols_) throw Error(ErrorCode::InvalidInput, "row length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

void IntegerMatrix::append_rows(const IntegerMatrix& other) {
  for (std::size_t r = 0; r < other.rows(); ++r) append_row(other.row(r));
}

void IntegerMatrix::remove_row(std::size_t r) {
  auto first = data_.begin() + static_cast<std::ptrdiff_t>(r * cols_);
  data_.erase(first, first + static_cast<std::ptrdiff_t>(cols_));
  --rows_;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor.is_zero()) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (!(*this)(src, c).is_zero()) (*this)(dst, c) += factor * (*this)(src, c);
  }
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor.is_zero()) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (!(*this)(r, src).is_zero()) (*this)(r, dst) += factor * (*this)(r, src);
  }
}

void IntegerMatrix::negate_row(std::size_t r) {
  for (auto& x : row(r)) x = -x;
}

void IntegerMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntegerMatrix IntegerMatrix::select_rows(std::span<const std::size_t> indices) const {
  IntegerMatrix m(0, cols_);
  for (auto i : indices) m.append_row(row(i));
  return m;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::Internal, "matrix product shape mismatch");
  IntegerMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += x * b(k, j);
    }
  return p;
}

IntegerVector operator*(std::span<const Integer> v, const IntegerMatrix& m) {
  if (v.size() != m.rows()) throw Error(ErrorCode::Internal, "vector-matrix shape mismatch");
  IntegerVector out(m.cols());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[k] * m(k, j);
  }
  return out;
}

IntegerVector operator*(const IntegerMatrix& m, std::span<const Integer> v) {
  if (v.size() != m.cols()) throw Error(ErrorCode::Internal, "matrix-vector shape mismatch");
  IntegerVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = dot(m.row(i), v);
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << '\n';
  }
  return os;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::Internal, "dot product length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

IntegerVector add(std::span<const Integer> a, std::span<const Integer> b) {
  IntegerVector out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

IntegerVector subtract(std::span<const Integer> a, std::span<const Integer> b) {
  IntegerVector out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

IntegerVector scale(std::span<const Integer> a, const Integer& factor) {
  IntegerVector out(a.begin(), a.end());
  for (auto& x : out) x *= factor;
  return out;
}

bool is_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x.is_zero(); });
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) {
    if (!x.is_zero()) g = gcd(g, x);
    if (g == Integer(1)) break;
  }
  return g;
}

IntegerVector make_primitive(std::span<const Integer> v) {
  IntegerVector out(v.begin(), v.end());
  Integer g = content(v);
  if (g.is_zero() || g == Integer(1)) return out;
  for (auto& x : out) x /= g;
  return out;
}

IntegerVector unit_vector(std::size_t dim, std::size_t i) {
  IntegerVector v(dim);
  v[i] = 1;
  return v;
}

bool lex_less(std::span<const Integer> a, std::span<const Integer> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t rank(const IntegerMatrix& m) { return independent_rows(m).size(); }

std::vector<std::size_t> independent_rows(const IntegerMatrix& m) {
  // Fraction-free incremental echelon: each accepted row is reduced against
  // the previous pivots and stored with its pivot column.
  std::vector<IntegerVector> basis;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> chosen;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    IntegerVector v = m.row_vector(r);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::size_t p = pivots[b];
      if (v[p].is_zero()) continue;
      const Integer a = basis[b][p];
      const Integer f = v[p];
      for (std::size_t c = 0; c < v.size(); ++c) v[c] = v[c] * a - basis[b][c] * f;
      v = make_primitive(v);
    }
    auto it = std::find_if(v.begin(), v.end(), [](const Integer& x) { return !x.is_zero(); });
    if (it == v.end()) continue;
    pivots.push_back(static_cast<std::size_t>(it - v.begin()));
    basis.push_back(std::move(v));
    chosen.push_back(r);
  }
  return chosen;
}

Integer determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::Internal, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  Integer d = a(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

IntegerMatrix adjugate(const IntegerMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error(ErrorCode::Internal, "adjugate of non-square matrix");
  IntegerMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  IntegerMatrix minor(n - 1, n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      Integer cof = determinant(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      adj(j, i) = cof;
    }
  }
  return adj;
}

bool solve_left_rational(const IntegerMatrix& m, std::span<const Integer> b,
                         std::vector<Rational>& x) {
  // x * m = b  <=>  m^T x^T = b^T ; Gauss-Jordan on the augmented system.
  const std::size_t unknowns = m.rows();
  const std::size_t eqs = m.cols();
  if (b.size() != eqs) throw Error(ErrorCode::Internal, "solve: rhs length mismatch");
  std::vector<std::vector<Rational>> a(eqs, std::vector<Rational>(unknowns + 1));
  for (std::size_t e = 0; e < eqs; ++e) {
    for (std::size_t u = 0; u < unknowns; ++u) a[e][u] = Rational(m(u, e));
    a[e][unknowns] = Rational(b[e]);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < unknowns && row < eqs; ++col) {
    std::size_t p = row;
    while (p < eqs && a[p][col].sign() == 0) ++p;
    if (p == eqs) continue;
    std::swap(a[p], a[row]);
    const Rational inv = Rational(1) / a[row][col];
    for (auto& v : a[row]) v *= inv;
    for (std::size_t r = 0; r < eqs; ++r) {
      if (r == row || a[r][col].sign() == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = col; c <= unknowns; ++c) a[r][c] -= f * a[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < eqs; ++r) {
    if (a[r][unknowns].sign() != 0) return false;
  }
  x.assign(unknowns, Rational(0));
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = a[r][unknowns];
  return true;
}

}  // namespace latk
