#include "latk/polynomial.hpp"

#include <map>
#include <mutex>

#include "latk/error.hpp"

namespace latk {

void trim(Polynomial& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

long degree(const Polynomial& p) { return static_cast<long>(p.size()) - 1; }

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  Polynomial r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b) {
  Polynomial r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Polynomial monomial(std::size_t k, const Integer& c) {
  if (c.is_zero()) return {};
  Polynomial p(k + 1);
  p[k] = c;
  return p;
}

Polynomial one_minus_t_pow(std::size_t g) {
  Polynomial p(g + 1);
  p[0] = 1;
  p[g] -= 1;
  trim(p);
  return p;
}

PolyDivision poly_divmod(const Polynomial& a, const Polynomial& b) {
  if (b.empty()) throw Error(ErrorCode::Internal, "polynomial division by zero");
  const Integer& lead = b.back();
  if (!(abs(lead) == Integer(1))) throw Error(ErrorCode::Internal, "divisor is not monic up to sign");
  Polynomial r = a;
  trim(r);
  PolyDivision out;
  if (r.size() < b.size()) {
    out.remainder = r;
    return out;
  }
  out.quotient.assign(r.size() - b.size() + 1, Integer(0));
  for (std::size_t i = r.size(); i-- >= b.size();) {
    if (r[i].is_zero()) continue;
    Integer q = lead.sign() > 0 ? r[i] : -r[i];
    const std::size_t shift = i - (b.size() - 1);
    out.quotient[shift] = q;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= q * b[j];
  }
  trim(out.quotient);
  trim(r);
  out.remainder = std::move(r);
  return out;
}

Polynomial poly_div_exact(const Polynomial& a, const Polynomial& b) {
  PolyDivision d = poly_divmod(a, b);
  if (!d.remainder.empty()) throw Error(ErrorCode::InexactDivision, "polynomial division is not exact");
  return d.quotient;
}

std::vector<std::size_t> divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k <= n; ++k)
    if (n % k == 0) out.push_back(k);
  return out;
}

const Polynomial& cyclotomic(std::size_t k) {
  static std::mutex mu;
  static std::map<std::size_t, Polynomial> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  if (k == 0) throw Error(ErrorCode::Internal, "cyclotomic polynomial of order 0");
  // zeta_k = (1 - t^k) / prod_{j | k, j < k} zeta_j; the recursion needs the
  // smaller ones, computed here without re-entering the lock.
  for (std::size_t j : divisors(k)) {
    if (cache.count(j)) continue;
    Polynomial p = one_minus_t_pow(j);
    for (std::size_t i : divisors(j))
      if (i < j) p = poly_div_exact(p, cache.at(i));
    cache.emplace(j, std::move(p));
  }
  return cache.at(k);
}

}  // namespace latk
