#pragma once

#include <map>
#include <vector>

#include "latk/matrix.hpp"
#include "latk/polynomial.hpp"

namespace latk {

/// t^shift * numerator(t) / prod (1 - t^g)^mult over the denominator map.
struct HilbertSeries {
  Polynomial numerator;
  long shift = 0;
  std::map<long, long> denominator;

  long denominator_factors() const;
  /// Coefficients of t^shift, t^(shift+1), ... (count entries).
  std::vector<Integer> expand(std::size_t count) const;
  /// Coefficient of t^k.
  Integer coefficient(long k) const;
};

/// t^shift * numerator / prod zeta_k^e_k with the numerator coprime to every
/// zeta_k present.
struct CyclotomicForm {
  Polynomial numerator;
  long shift = 0;
  std::map<long, long> orders;
};

/// Sums t^deg(u) / prod (1 - t^deg(v_i)) over Stanley components. Components
/// with the same ray degrees share one numerator.
class SeriesAccumulator {
 public:
  void add(long offset_degree, std::vector<long> ray_degrees);
  void merge(const SeriesAccumulator& other);
  bool empty() const { return classes_.empty(); }
  /// Common denominator (1 - t^l)^r with l the lcm of all ray degrees and r
  /// the largest number of rays of a component.
  HilbertSeries result() const;

 private:
  std::map<std::vector<long>, std::map<long, Integer>> classes_;
};

CyclotomicForm reduce(const HilbertSeries& hs);
/// Denominator prod (1 - t^g_i) with g_d the lcm of all orders, then the lcm
/// of the remaining ones, and so on.
HilbertSeries standard_denominator(const CyclotomicForm& cf);
/// Same series over prod (1 - t^g) for the given exponents.
/// Throws InexactDivision if that product is not a multiple of the reduced
/// denominator.
HilbertSeries renumerate(const CyclotomicForm& cf, const std::vector<long>& exponents);

/// Degree of the rational function (numerator degree minus denominator degree).
long rational_degree(const CyclotomicForm& cf);

/// q(k) = sum_i coefficients[k mod period][i] * k^i / denominator, valid for
/// k >= valid_from.
struct Quasipolynomial {
  long period = 1;
  long valid_from = 0;
  Integer denominator{1};
  std::vector<std::vector<Integer>> coefficients;

  Rational value(long k) const;
};

/// Throws NotGraded when the series has no pole at 1.
Quasipolynomial quasipolynomial(const CyclotomicForm& cf);

/// Heights h_j of the monomial ideals (x_1, ..., x_j) for the rows of `gens`
/// (extreme rays of a pointed full-dimensional cone, in the given order).
std::vector<long> hsop_heights(const IntegerMatrix& gens, const IntegerMatrix& support_forms);

std::vector<long> hsop_degrees(const std::vector<long>& heights, const std::vector<long>& degrees);

}  // namespace latk
