#pragma once

#include <functional>
#include <string>
#include <vector>

#include "latk/matrix.hpp"

namespace latk {

/// Minimal generating set of the monoid C cap Z^d of a pointed cone given by
/// its support forms. `order_degree` must be positive on nonzero points of the
/// cone and additive; candidates must contain the Hilbert basis. Output is
/// sorted by (order degree, lex).
std::vector<IntegerVector> global_reduce(std::vector<IntegerVector> candidates,
                                         const IntegerMatrix& support_forms,
                                         const std::function<Integer(std::span<const Integer>)>& order_degree);

/// Sum of the support forms: a positive order degree for a pointed cone.
Integer support_degree(const IntegerMatrix& support_forms, std::span<const Integer> x);

/// Points y of `closed_points` with y - x outside the cone for every nonzero
/// x in `gens`. Duplicates are removed; result sorted lexicographically.
std::vector<IntegerVector> minimal_module_generators(const std::vector<IntegerVector>& closed_points,
                                                     const IntegerMatrix& gens,
                                                     const IntegerMatrix& support_forms);

struct ClassGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  /// "0", "Z^1", "Z/3", "Z^1 + Z/2 + Z/4", ...
  std::string str() const;
};

/// Cokernel of x -> (sigma_1(x), ..., sigma_s(x)).
ClassGroup class_group(const IntegerMatrix& support_forms);

}  // namespace latk
