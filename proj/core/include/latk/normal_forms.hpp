#pragma once

#include <optional>
#include <vector>

#include "latk/matrix.hpp"

namespace latk {

/// U * A * V = S with S diagonal, U and V unimodular.
struct SmithForm {
  IntegerMatrix S;
  IntegerMatrix U;
  IntegerMatrix V;
  /// min(rows, cols) diagonal entries, each dividing the next, nonnegative.
  std::vector<Integer> diag;
  std::size_t rank = 0;
};

/// U * A = H with H in row echelon form, positive pivots and the entries
/// above each pivot reduced into [0, pivot).
struct HermiteForm {
  IntegerMatrix H;
  IntegerMatrix U;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

SmithForm smith_normal_form(const IntegerMatrix& a);
HermiteForm hermite_normal_form(const IntegerMatrix& a);

/// Nonzero rows of the Hermite form: the canonical basis of the row lattice.
IntegerMatrix lattice_basis(const IntegerMatrix& rows);

/// Canonical (Hermite-reduced) basis of {x in Z^cols : A x = 0}, as rows.
/// The result is saturated.
IntegerMatrix kernel_basis(const IntegerMatrix& a);

/// Basis of (R-span of rows) intersected with Z^n.
IntegerMatrix saturation(const IntegerMatrix& rows);

/// Reduces v modulo the lattice whose Hermite basis is `hnf` so that every
/// pivot coordinate lands in [0, pivot).
IntegerVector reduce_modulo(std::span<const Integer> v, const IntegerMatrix& hnf);
bool in_lattice(std::span<const Integer> v, const IntegerMatrix& hnf);

/// Inverse of a unimodular matrix.
IntegerMatrix unimodular_inverse(const IntegerMatrix& m);

struct AffineLattice {
  IntegerVector particular;
  /// Hermite basis of the associated homogeneous lattice.
  IntegerMatrix lattice;
};

/// Solves B x = b, C x = c (mod m). Returns nullopt when there is no integer
/// solution. `dim` is the number of unknowns (needed when both systems are
/// empty).
std::optional<AffineLattice> solve_diophantine(std::size_t dim, const IntegerMatrix& b_mat,
                                               std::span<const Integer> b,
                                               const IntegerMatrix& c_mat,
                                               std::span<const Integer> c,
                                               std::span<const Integer> moduli);

/// Splitting of Z^n along a saturated sublattice W (rows of `basis`):
/// x * q has its last n - w coordinates zero iff x lies in W, and
/// y -> y * section lifts quotient coordinates back to Z^n.
struct SublatticeSplit {
  IntegerMatrix q;
  IntegerMatrix section;
  std::size_t sub_rank = 0;

  /// Quotient coordinates of x (length n - sub_rank).
  IntegerVector project(std::span<const Integer> x) const;
};

SublatticeSplit split_sublattice(const IntegerMatrix& basis, std::size_t n);

}  // namespace latk
