#include "latk/normal_forms.hpp"

#include <algorithm>

#include "latk/error.hpp"

namespace latk {

namespace {

struct Pos {
  std::size_t r;
  std::size_t c;
};

// Smallest nonzero entry (by absolute value) in the lower-right block.
std::optional<Pos> min_abs_entry(const IntegerMatrix& s, std::size_t t) {
  std::optional<Pos> best;
  Integer best_abs;
  for (std::size_t i = t; i < s.rows(); ++i)
    for (std::size_t j = t; j < s.cols(); ++j) {
      if (s(i, j).is_zero()) continue;
      Integer a = abs(s(i, j));
      if (!best || a < best_abs) {
        best = Pos{i, j};
        best_abs = a;
        if (best_abs == Integer(1)) return best;
      }
    }
  return best;
}

// Smallest nonzero entry in row t and column t from position t on.
Pos min_abs_cross(const IntegerMatrix& s, std::size_t t) {
  Pos best{t, t};
  Integer best_abs = abs(s(t, t));
  auto consider = [&](std::size_t i, std::size_t j) {
    if (s(i, j).is_zero()) return;
    Integer a = abs(s(i, j));
    if (best_abs.is_zero() || a < best_abs) {
      best = Pos{i, j};
      best_abs = a;
    }
  };
  for (std::size_t i = t + 1; i < s.rows(); ++i) consider(i, t);
  for (std::size_t j = t + 1; j < s.cols(); ++j) consider(t, j);
  return best;
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& a) {
  SmithForm f{a, IntegerMatrix::identity(a.rows()), IntegerMatrix::identity(a.cols()), {}, 0};
  IntegerMatrix& s = f.S;
  const std::size_t n = std::min(a.rows(), a.cols());

  auto swap_rows = [&](std::size_t x, std::size_t y) {
    s.swap_rows(x, y);
    f.U.swap_rows(x, y);
  };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    s.swap_cols(x, y);
    f.V.swap_cols(x, y);
  };
  auto move_to_pivot = [&](Pos p, std::size_t t) {
    swap_rows(t, p.r);
    swap_cols(t, p.c);
  };

  std::size_t t = 0;
  for (; t < n; ++t) {
    auto start = min_abs_entry(s, t);
    if (!start) break;
    move_to_pivot(*start, t);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s(i, t).is_zero()) continue;
        Integer q = s(i, t) / s(t, t);
        s.add_row_multiple(i, t, -q);
        f.U.add_row_multiple(i, t, -q);
        if (!s(i, t).is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s(t, j).is_zero()) continue;
        Integer q = s(t, j) / s(t, t);
        s.add_col_multiple(j, t, -q);
        f.V.add_col_multiple(j, t, -q);
        if (!s(t, j).is_zero()) clean = false;
      }
      if (!clean) {
        move_to_pivot(min_abs_cross(s, t), t);
        continue;
      }
      // Divisibility: fold an offending row into the pivot row and retry.
      bool divisible = true;
      for (std::size_t i = t + 1; i < s.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < s.cols(); ++j) {
          if (!(s(i, j) % s(t, t)).is_zero()) {
            s.add_row_multiple(t, i, 1);
            f.U.add_row_multiple(t, i, 1);
            divisible = false;
            break;
          }
        }
      if (divisible) break;
    }
    if (s(t, t).sign() < 0) {
      s.negate_row(t);
      f.U.negate_row(t);
    }
  }
  f.rank = t;
  f.diag.resize(n);
  for (std::size_t i = 0; i < n; ++i) f.diag[i] = s(i, i);
  return f;
}

HermiteForm hermite_normal_form(const IntegerMatrix& a) {
  HermiteForm f{a, IntegerMatrix::identity(a.rows()), 0, {}};
  IntegerMatrix& h = f.H;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    for (;;) {
      std::optional<std::size_t> piv;
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (h(i, c).is_zero()) continue;
        if (!piv || abs(h(i, c)) < abs(h(*piv, c))) piv = i;
      }
      if (!piv) break;
      h.swap_rows(r, *piv);
      f.U.swap_rows(r, *piv);
      bool done = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c).is_zero()) continue;
        Integer q = h(i, c) / h(r, c);
        h.add_row_multiple(i, r, -q);
        f.U.add_row_multiple(i, r, -q);
        if (!h(i, c).is_zero()) done = false;
      }
      if (done) break;
    }
    if (h(r, c).is_zero()) continue;
    if (h(r, c).sign() < 0) {
      h.negate_row(r);
      f.U.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, c), h(r, c));
      h.add_row_multiple(i, r, -q);
      f.U.add_row_multiple(i, r, -q);
    }
    f.pivot_cols.push_back(c);
    ++r;
  }
  f.rank = r;
  return f;
}

IntegerMatrix lattice_basis(const IntegerMatrix& rows) {
  HermiteForm f = hermite_normal_form(rows);
  IntegerMatrix out(0, rows.cols());
  for (std::size_t i = 0; i < f.rank; ++i) out.append_row(f.H.row(i));
  return out;
}

IntegerMatrix kernel_basis(const IntegerMatrix& a) {
  HermiteForm f = hermite_normal_form(a.transpose());
  IntegerMatrix k(0, a.cols());
  for (std::size_t i = f.rank; i < f.U.rows(); ++i) k.append_row(f.U.row(i));
  return lattice_basis(k);
}

IntegerMatrix saturation(const IntegerMatrix& rows) {
  if (rank(rows) == 0) return IntegerMatrix(0, rows.cols());
  return kernel_basis(kernel_basis(rows));
}

IntegerVector reduce_modulo(std::span<const Integer> v, const IntegerMatrix& hnf) {
  IntegerVector out(v.begin(), v.end());
  for (std::size_t r = 0; r < hnf.rows(); ++r) {
    auto row = hnf.row(r);
    auto it = std::find_if(row.begin(), row.end(), [](const Integer& x) { return !x.is_zero(); });
    if (it == row.end()) continue;
    const std::size_t p = static_cast<std::size_t>(it - row.begin());
    Integer q = floor_div(out[p], *it);
    if (q.is_zero()) continue;
    for (std::size_t c = p; c < out.size(); ++c) out[c] -= q * row[c];
  }
  return out;
}

bool in_lattice(std::span<const Integer> v, const IntegerMatrix& hnf) {
  return is_zero(reduce_modulo(v, hnf));
}

IntegerMatrix unimodular_inverse(const IntegerMatrix& m) {
  Integer d = determinant(m);
  if (!(abs(d) == Integer(1))) throw Error(ErrorCode::Internal, "matrix is not unimodular");
  IntegerMatrix adj = adjugate(m);
  if (d.sign() < 0)
    for (std::size_t r = 0; r < adj.rows(); ++r) adj.negate_row(r);
  return adj;
}

std::optional<AffineLattice> solve_diophantine(std::size_t dim, const IntegerMatrix& b_mat,
                                               std::span<const Integer> b,
                                               const IntegerMatrix& c_mat,
                                               std::span<const Integer> c,
                                               std::span<const Integer> moduli) {
  const std::size_t p = b_mat.rows();
  const std::size_t k = c_mat.rows();
  if (p > 0 && b_mat.cols() != dim) throw Error(ErrorCode::InvalidInput, "equation width mismatch");
  if (k > 0 && c_mat.cols() != dim) throw Error(ErrorCode::InvalidInput, "congruence width mismatch");
  if (b.size() != p || c.size() != k || moduli.size() != k)
    throw Error(ErrorCode::InvalidInput, "right-hand side length mismatch");
  for (const auto& m : moduli)
    if (m.sign() <= 0) throw Error(ErrorCode::InvalidInput, "modulus must be positive");

  if (p + k == 0) return AffineLattice{IntegerVector(dim), IntegerMatrix::identity(dim)};

  // Congruences become equations with one slack variable each.
  const std::size_t n = dim + k;
  IntegerMatrix m(p + k, n);
  IntegerVector rhs(p + k);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = b_mat(i, j);
    rhs[i] = b[i];
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < dim; ++j) m(p + i, j) = c_mat(i, j);
    m(p + i, dim + i) = -moduli[i];
    rhs[p + i] = c[i];
  }

  SmithForm f = smith_normal_form(m);
  IntegerVector urhs = f.U * std::span<const Integer>(rhs);
  IntegerVector z(n);
  for (std::size_t i = 0; i < urhs.size(); ++i) {
    if (i < f.rank) {
      if (!(urhs[i] % f.diag[i]).is_zero()) return std::nullopt;
      z[i] = urhs[i] / f.diag[i];
    } else if (!urhs[i].is_zero()) {
      return std::nullopt;
    }
  }
  IntegerVector y = f.V * std::span<const Integer>(z);

  IntegerMatrix gens(0, dim);
  for (std::size_t j = f.rank; j < n; ++j) {
    IntegerVector g(dim);
    for (std::size_t i = 0; i < dim; ++i) g[i] = f.V(i, j);
    gens.append_row(g);
  }
  AffineLattice out;
  out.lattice = lattice_basis(gens);
  out.particular = reduce_modulo(std::span<const Integer>(y.data(), dim), out.lattice);
  return out;
}

IntegerVector SublatticeSplit::project(std::span<const Integer> x) const {
  IntegerVector full = x * q;
  return {full.begin() + static_cast<std::ptrdiff_t>(sub_rank), full.end()};
}

SublatticeSplit split_sublattice(const IntegerMatrix& basis, std::size_t n) {
  SublatticeSplit s;
  if (basis.rows() == 0) {
    s.q = IntegerMatrix::identity(n);
    s.section = IntegerMatrix::identity(n);
    return s;
  }
  SmithForm f = smith_normal_form(basis);
  for (std::size_t i = 0; i < f.rank; ++i)
    if (!(f.diag[i] == Integer(1))) throw Error(ErrorCode::Internal, "sublattice is not saturated");
  s.sub_rank = f.rank;
  s.q = f.V;
  IntegerMatrix inv = unimodular_inverse(f.V);
  s.section = IntegerMatrix(0, n);
  for (std::size_t r = f.rank; r < n; ++r) s.section.append_row(inv.row(r));
  return s;
}

}  // namespace latk
