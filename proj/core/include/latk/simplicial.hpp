#pragma once

#include <vector>

#include "latk/matrix.hpp"
#include "latk/triangulation.hpp"

namespace latk {

/// Lattice points of the parallelotope spanned by the rows of `rays`, one per
/// residue class of Z^d modulo the ray lattice. Points with barycentric
/// coordinate 0 at an excluded position are shifted by that ray. An empty
/// `excluded` vector means the closed (semi-open at the far facets) box.
/// Throws SingularSimplex.
std::vector<IntegerVector> parallelotope_points(const IntegerMatrix& rays,
                                                const std::vector<bool>& excluded);

/// Nonzero parallelotope points plus the rays, with every element removed
/// that is another candidate plus a point of the simplicial cone.
std::vector<IntegerVector> local_candidates(const std::vector<IntegerVector>& points,
                                            const IntegerMatrix& rays);

/// u + sum Z_+ v_i over the rays of one simplex.
struct StanleyComponent {
  IntegerVector offset;
  std::vector<std::size_t> rays;
};

std::vector<StanleyComponent> stanley_components(const SimplicialCone& simplex,
                                                 const std::vector<IntegerVector>& points);

}  // namespace latk
