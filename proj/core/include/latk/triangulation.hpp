#pragma once

#include <vector>

#include "latk/matrix.hpp"

namespace latk {

struct SimplicialCone {
  /// Row indices into the generator matrix, ascending.
  std::vector<std::size_t> generators;
  /// |det| of the generator rows.
  Integer determinant;
  /// excluded[i]: the facet opposite generators[i] is removed, i.e. points
  /// with barycentric coordinate 0 at position i do not belong to this cone.
  std::vector<bool> excluded;
};

struct Triangulation {
  std::vector<SimplicialCone> simplices;
  Integer detsum;
};

/// Placing triangulation of cone(gens) in row order. gens must span a pointed
/// full-dimensional cone. Half-open exclusions are assigned so that the
/// simplicial cones partition the cone.
Triangulation lex_triangulation(const IntegerMatrix& gens);

struct BottomFacet {
  std::vector<std::size_t> generators;
  /// Affine form (lambda, c): lambda.x + c >= 0 on conv(G) + cone, c < 0.
  IntegerVector form;
};

/// Compact facets of conv(G) + cone(G), computed as the facets of
/// conv(G) + R_+ z that are visible from 0. z must lie in cone(G); z = 0 is
/// allowed.
std::vector<BottomFacet> bottom_facets(const IntegerMatrix& gens, std::span<const Integer> z);

/// Triangulation of cone(gens) whose simplices are generated by points on
/// bottom facets, each facet triangulated by placing in the global row order.
Triangulation bottom_triangulation(const IntegerMatrix& gens);

/// max degree / min degree over the rows. Throws NonPositiveDegree.
Rational roughness(const IntegerMatrix& gens, std::span<const Integer> grading);

inline constexpr int kRoughnessThreshold = 10;

/// Barycentric numerators of x with respect to the simplex rows: the entries
/// of x * adj(M) with sign normalized so the common denominator |det M| is
/// positive.
IntegerVector barycentric_numerators(const IntegerMatrix& simplex_rows, std::span<const Integer> x);

/// Whether x lies in the half-open simplicial cone.
bool in_half_open_cone(const IntegerMatrix& gens, const SimplicialCone& s, std::span<const Integer> x);

IntegerMatrix simplex_rows(const IntegerMatrix& gens, const SimplicialCone& s);

}  // namespace latk
