#pragma once

#include <vector>

#include "latk/integer.hpp"

namespace latk {

/// Dense integer polynomial in t, coefficient of t^i at index i. The zero
/// polynomial is the empty vector; trailing zeros are trimmed by every
/// operation.
using Polynomial = std::vector<Integer>;

void trim(Polynomial& p);
/// Degree of p; -1 for the zero polynomial.
long degree(const Polynomial& p);
Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
/// t^k
Polynomial monomial(std::size_t k, const Integer& c = Integer(1));
/// 1 - t^g
Polynomial one_minus_t_pow(std::size_t g);

/// Quotient and remainder for a divisor with leading coefficient +1 or -1.
struct PolyDivision {
  Polynomial quotient;
  Polynomial remainder;
};
PolyDivision poly_divmod(const Polynomial& a, const Polynomial& b);
/// Exact division; throws InexactDivision if b does not divide a.
Polynomial poly_div_exact(const Polynomial& a, const Polynomial& b);

/// zeta_1 = 1 - t and zeta_k = Phi_k for k > 1, so that
/// 1 - t^g is the product of zeta_k over the divisors k of g.
const Polynomial& cyclotomic(std::size_t k);

std::vector<std::size_t> divisors(std::size_t n);

}  // namespace latk
