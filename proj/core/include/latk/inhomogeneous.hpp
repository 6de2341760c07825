#pragma once

#include <optional>
#include <vector>

#include "latk/cone.hpp"
#include "latk/input.hpp"
#include "latk/series.hpp"

namespace latk {

/// Homogeneous data for the cone over the input. For a cone input `level` is
/// empty; otherwise it is the dehomogenizing form (last coordinate unless the
/// input names one) and lev >= 0 is among the inequalities.
struct Homogenized {
  HomogeneousSystem system;
  std::optional<IntegerVector> level;
};

/// Throws EmptyLattice when the affine equations and congruences have no
/// integer solution, InvalidInput for inconsistent sections.
Homogenized homogenize(const InputSystem& input);

struct LevelSplit {
  std::vector<IntegerVector> module_generators;
  std::vector<IntegerVector> recession_basis;
};

/// Level 1 elements are module generators, level 0 ones the Hilbert basis of
/// the recession monoid; other levels are dropped.
LevelSplit split_levels(const std::vector<IntegerVector>& basis, std::span<const Integer> level);

/// Number of residue classes of the module generators modulo the group
/// generated by the recession basis and the units (all ambient).
std::size_t module_rank_residues(const std::vector<IntegerVector>& module_generators,
                                 const std::vector<IntegerVector>& recession_basis,
                                 const IntegerMatrix& units);

/// Number of lattice points in the projection of the polyhedron along the
/// span of its recession cone. `level` is the level form in working
/// coordinates of the pointed cone.
std::size_t module_rank_polytope(const ComputedCone& cone, std::span<const Integer> level);

/// Adds the level-1 part of the component offset + sum Z_+ rays.
void add_level_one_components(SeriesAccumulator& acc, std::span<const Integer> offset,
                              const IntegerMatrix& rays, std::span<const Integer> level,
                              std::span<const Integer> grading);

}  // namespace latk
