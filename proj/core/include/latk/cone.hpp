#pragma once

#include <optional>
#include <vector>

#include "latk/matrix.hpp"

namespace latk {

/// Homogeneous constraint data in dimension `dim`. The described set is the
/// intersection of cone(generators) (whole space if no generators are given),
/// the inequalities `a.x >= 0`, the equations `b.x = 0` and the lattice cut out
/// by the congruences `c.x = 0 (mod m)` (rows of width dim + 1, modulus last).
struct HomogeneousSystem {
  std::size_t dim = 0;
  IntegerMatrix generators;
  IntegerMatrix inequalities;
  IntegerMatrix equations;
  IntegerMatrix congruences;
  std::optional<IntegerVector> grading;
};

/// Maps between the ambient lattice Z^D and the working lattice Z^k:
/// ambient = working * embedding, working = ambient * projection / denominator.
struct LatticeTransform {
  IntegerMatrix embedding;
  IntegerMatrix projection;
  Integer denominator{1};

  static LatticeTransform identity(std::size_t n);
  /// Transform for the lattice with basis rows `basis` (full row rank).
  static LatticeTransform from_basis(const IntegerMatrix& basis);

  std::size_t ambient_dim() const { return embedding.cols(); }
  std::size_t working_dim() const { return embedding.rows(); }

  IntegerVector to_ambient(std::span<const Integer> y) const;
  /// nullopt when x is not in the image lattice.
  std::optional<IntegerVector> to_working(std::span<const Integer> x) const;
  /// A linear form on ambient space restricted to the working lattice.
  IntegerVector form_to_working(std::span<const Integer> form) const;
};

/// Result of the double description method: the cone is
/// cone(rays) + span(lineality). Rays are primitive, orthogonal to the
/// lineality space and sorted lexicographically; lineality is a saturated
/// Hermite basis.
struct ConeDescription {
  IntegerMatrix rays;
  IntegerMatrix lineality;
};

/// Generators of {x in R^n : a.x >= 0 for all rows a}.
ConeDescription cone_from_inequalities(const IntegerMatrix& inequalities, std::size_t n);

/// Support forms of cone(rays) and the equations of its linear span.
struct DualDescription {
  IntegerMatrix forms;
  IntegerMatrix equations;
};

DualDescription dualize(const IntegerMatrix& rays, std::size_t n);

/// Indices of the rows of `gens` spanning extreme rays of the cone with the
/// given support forms (full-dimensional, lineality of dimension `lineality_dim`).
/// Rows that are positive multiples of an earlier extreme row are skipped.
std::vector<std::size_t> extreme_ray_indices(const IntegerMatrix& gens, const IntegerMatrix& forms,
                                             std::size_t lineality_dim);

/// A cone in working coordinates; full-dimensional in Z^dim.
struct ComputedCone {
  std::size_t dim = 0;
  LatticeTransform transform;
  /// Input generators in working coordinates, or the extreme rays when the
  /// input had none (or they do not lie in the working lattice).
  IntegerMatrix generators;
  bool generators_from_input = false;
  IntegerMatrix support_forms;
  IntegerMatrix extreme_rays;
  IntegerMatrix maximal_subspace;
  /// Hermite basis of the maximal subspace in ambient coordinates; kept
  /// through the pointed quotient.
  IntegerMatrix ambient_units;
  std::optional<IntegerVector> grading;
  Integer grading_denominator{1};
  bool grading_implicit = false;
  bool quotient = false;

  bool pointed() const { return maximal_subspace.rows() == 0; }
  Integer degree(std::span<const Integer> x) const;
  /// Working vector to ambient coordinates, reduced modulo the units.
  IntegerVector lift(std::span<const Integer> y) const;
  bool contains(std::span<const Integer> x) const;
};

/// Folds equations and congruences into the working lattice, restricts to the
/// linear span of the cone, and computes support forms, extreme rays and the
/// maximal subspace. Throws EmptyLattice if the lattice is zero-dimensional
/// while constraints demanded a nonzero point (never for homogeneous data).
ComputedCone preprocess(const HomogeneousSystem& system, bool normalize_grading);

/// Image of a nonpointed cone modulo its maximal subspace.
ComputedCone pointed_quotient(const ComputedCone& cone);

/// Same data as `cone` routed through a trivial quotient: used to check that
/// the quotient path agrees with the direct one.
ComputedCone identity_quotient(const ComputedCone& cone);

/// Primitive linear form taking one common positive value on all rays, if any.
std::optional<IntegerVector> implicit_grading(const IntegerMatrix& rays);

/// Sorts rows by degree (if a grading is given), then lexicographically.
IntegerMatrix sort_by_degree(const IntegerMatrix& rows, const std::optional<IntegerVector>& grading);

}  // namespace latk
