#include "latk/series.hpp"

#include <algorithm>
#include <numeric>
#include <boost/dynamic_bitset.hpp>

#include "latk/error.hpp"

namespace latk {

namespace {

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Polynomial power(const Polynomial& p, long e) {
  Polynomial r{Integer(1)};
  for (long i = 0; i < e; ++i) r = poly_mul(r, p);
  return r;
}

}  // namespace

long HilbertSeries::denominator_factors() const {
  long n = 0;
  for (const auto& [g, m] : denominator) n += m;
  return n;
}

std::vector<Integer> HilbertSeries::expand(std::size_t count) const {
  std::vector<Integer> c(count);
  for (std::size_t i = 0; i < numerator.size() && i < count; ++i) c[i] = numerator[i];
  for (const auto& [g, m] : denominator) {
    const auto step = static_cast<std::size_t>(g);
    for (long rep = 0; rep < m; ++rep)
      for (std::size_t k = step; k < count; ++k) c[k] += c[k - step];
  }
  return c;
}

Integer HilbertSeries::coefficient(long k) const {
  if (k < shift) return 0;
  return expand(static_cast<std::size_t>(k - shift) + 1).back();
}

void SeriesAccumulator::add(long offset_degree, std::vector<long> ray_degrees) {
  for (long g : ray_degrees)
    if (g <= 0) throw Error(ErrorCode::NonPositiveDegree, "ray of nonpositive degree in series");
  std::sort(ray_degrees.begin(), ray_degrees.end());
  classes_[std::move(ray_degrees)][offset_degree] += 1;
}

void SeriesAccumulator::merge(const SeriesAccumulator& other) {
  for (const auto& [rays, counts] : other.classes_) {
    auto& mine = classes_[rays];
    for (const auto& [e, c] : counts) mine[e] += c;
  }
}

HilbertSeries SeriesAccumulator::result() const {
  HilbertSeries hs;
  if (classes_.empty()) return hs;
  long ell = 1;
  std::size_t r = 0;
  long lo = 0;
  bool first = true;
  for (const auto& [rays, counts] : classes_) {
    for (long g : rays) ell = std::lcm(ell, g);
    r = std::max(r, rays.size());
    if (first || counts.begin()->first < lo) lo = counts.begin()->first;
    first = false;
  }
  Polynomial total;
  for (const auto& [rays, counts] : classes_) {
    Polynomial p;
    for (const auto& [e, c] : counts) p = poly_add(p, monomial(static_cast<std::size_t>(e - lo), c));
    for (long g : rays) {
      Polynomial geo;
      for (long k = 0; k < ell; k += g) geo = poly_add(geo, monomial(static_cast<std::size_t>(k)));
      p = poly_mul(p, geo);
    }
    p = poly_mul(p, power(one_minus_t_pow(static_cast<std::size_t>(ell)),
                          static_cast<long>(r - rays.size())));
    total = poly_add(total, p);
  }
  std::size_t lead = 0;
  while (lead < total.size() && total[lead].is_zero()) ++lead;
  hs.numerator.assign(total.begin() + static_cast<std::ptrdiff_t>(lead), total.end());
  hs.shift = lo + static_cast<long>(lead);
  if (r > 0) hs.denominator[ell] = static_cast<long>(r);
  return hs;
}

CyclotomicForm reduce(const HilbertSeries& hs) {
  CyclotomicForm cf;
  cf.numerator = hs.numerator;
  cf.shift = hs.shift;
  for (const auto& [g, m] : hs.denominator)
    for (std::size_t k : divisors(static_cast<std::size_t>(g))) cf.orders[static_cast<long>(k)] += m;
  if (cf.numerator.empty()) {
    cf.orders.clear();
    return cf;
  }
  for (auto& [k, e] : cf.orders) {
    const Polynomial& z = cyclotomic(static_cast<std::size_t>(k));
    while (e > 0) {
      PolyDivision d = poly_divmod(cf.numerator, z);
      if (!d.remainder.empty()) break;
      cf.numerator = std::move(d.quotient);
      --e;
    }
  }
  std::erase_if(cf.orders, [](const auto& kv) { return kv.second == 0; });
  return cf;
}

HilbertSeries standard_denominator(const CyclotomicForm& cf) {
  HilbertSeries hs;
  hs.numerator = cf.numerator;
  hs.shift = cf.shift;
  std::map<long, long> e = cf.orders;
  for (;;) {
    long g = 1;
    bool any = false;
    for (const auto& [k, m] : e) {
      if (m <= 0) continue;
      g = std::lcm(g, k);
      any = true;
    }
    if (!any) break;
    hs.denominator[g] += 1;
    for (std::size_t k : divisors(static_cast<std::size_t>(g))) {
      auto it = e.find(static_cast<long>(k));
      if (it != e.end() && it->second > 0) {
        --it->second;
      } else {
        hs.numerator = poly_mul(hs.numerator, cyclotomic(k));
      }
    }
  }
  return hs;
}

HilbertSeries renumerate(const CyclotomicForm& cf, const std::vector<long>& exponents) {
  std::map<long, long> have;
  for (long g : exponents) {
    if (g <= 0) throw Error(ErrorCode::InexactDivision, "denominator exponent must be positive");
    for (std::size_t k : divisors(static_cast<std::size_t>(g))) have[static_cast<long>(k)] += 1;
  }
  HilbertSeries hs;
  hs.numerator = cf.numerator;
  hs.shift = cf.shift;
  for (const auto& [k, e] : cf.orders) {
    auto it = have.find(k);
    if (it == have.end() || it->second < e)
      throw Error(ErrorCode::InexactDivision, "denominator is not a multiple of the reduced one");
  }
  for (const auto& [k, c] : have) {
    auto it = cf.orders.find(k);
    long missing = c - (it == cf.orders.end() ? 0 : it->second);
    hs.numerator = poly_mul(hs.numerator, power(cyclotomic(static_cast<std::size_t>(k)), missing));
  }
  for (long g : exponents) hs.denominator[g] += 1;
  return hs;
}

long rational_degree(const CyclotomicForm& cf) {
  long den = 0;
  for (const auto& [k, e] : cf.orders) den += e * euler_phi(k);
  return cf.shift + degree(cf.numerator) - den;
}

Rational Quasipolynomial::value(long k) const {
  const auto& row = coefficients[static_cast<std::size_t>(((k % period) + period) % period)];
  Integer sum = 0;
  Integer pw = 1;
  for (const auto& c : row) {
    sum += c * pw;
    pw *= Integer(k);
  }
  return Rational(sum, denominator);
}

Quasipolynomial quasipolynomial(const CyclotomicForm& cf) {
  auto one = cf.orders.find(1);
  if (one == cf.orders.end() || one->second <= 0)
    throw Error(ErrorCode::NotGraded, "series has no pole at 1");
  const long dim = one->second;
  Quasipolynomial q;
  for (const auto& [k, e] : cf.orders) q.period = std::lcm(q.period, k);
  q.valid_from = std::max(0L, rational_degree(cf) + 1);

  HilbertSeries hs = standard_denominator(cf);
  const long last = q.valid_from + q.period * (dim + 1);
  std::vector<Integer> coeff = hs.expand(static_cast<std::size_t>(std::max(0L, last - hs.shift + 1)));
  auto at = [&](long k) -> Integer {
    long i = k - hs.shift;
    return i < 0 ? Integer(0) : coeff[static_cast<std::size_t>(i)];
  };

  std::vector<std::vector<Rational>> rows;
  for (long j = 0; j < q.period; ++j) {
    long k0 = q.valid_from + ((j - q.valid_from) % q.period + q.period) % q.period;
    IntegerMatrix vander(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
    IntegerVector rhs(static_cast<std::size_t>(dim));
    for (long t = 0; t < dim; ++t) {
      long k = k0 + t * q.period;
      Integer pw = 1;
      for (long i = 0; i < dim; ++i) {
        vander(static_cast<std::size_t>(i), static_cast<std::size_t>(t)) = pw;
        pw *= Integer(k);
      }
      rhs[static_cast<std::size_t>(t)] = at(k);
    }
    std::vector<Rational> x;
    if (!solve_left_rational(vander, rhs, x)) throw Error(ErrorCode::Internal, "singular Vandermonde system");
    rows.push_back(std::move(x));
  }
  Integer den = 1;
  for (const auto& row : rows)
    for (const auto& c : row) den = lcm(den, c.denominator());
  q.denominator = den;
  for (const auto& row : rows) {
    std::vector<Integer> ints;
    for (const auto& c : row) ints.push_back(c.numerator() * (den / c.denominator()));
    q.coefficients.push_back(std::move(ints));
  }
  return q;
}

std::vector<long> hsop_heights(const IntegerMatrix& gens, const IntegerMatrix& support_forms) {
  using Bits = boost::dynamic_bitset<>;
  const std::size_t n = gens.rows();
  const auto d = static_cast<long>(gens.cols());

  std::vector<Bits> facets;
  for (std::size_t f = 0; f < support_forms.rows(); ++f) {
    Bits b(n);
    for (std::size_t j = 0; j < n; ++j)
      if (dot(support_forms.row(f), gens.row(j)).is_zero()) b.set(j);
    if (std::find(facets.begin(), facets.end(), b) == facets.end()) facets.push_back(b);
  }
  std::map<Bits, long> dim_cache;
  auto dim = [&](const Bits& face) {
    auto it = dim_cache.find(face);
    if (it != dim_cache.end()) return it->second;
    IntegerMatrix rows(0, gens.cols());
    for (std::size_t j = face.find_first(); j != Bits::npos; j = face.find_next(j)) rows.append_row(gens.row(j));
    long r = rows.rows() ? static_cast<long>(rank(rows)) : 0;
    dim_cache.emplace(face, r);
    return r;
  };

  std::vector<Bits> faces = facets;
  std::vector<Bits> active = facets;
  Bits processed(n);
  long m = d;
  long h_prev = 0;
  std::vector<long> heights;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Bits> g1, g2;
    for (auto& f : faces) (f.test(j) ? g2 : g1).push_back(f);
    long h;
    if (!g1.empty()) {
      long maxdim = 0;
      for (const auto& f : g1) maxdim = std::max(maxdim, dim(f));
      if (maxdim < m) {
        --m;
        h = h_prev + 1;
      } else {
        h = h_prev;
      }
    } else {
      --m;
      h = h_prev + 1;
    }

    std::vector<Bits> fresh;
    for (const auto& facet : active) {
      if (facet.test(j)) continue;
      Bits rest = facet - processed;
      bool covered = std::any_of(g1.begin(), g1.end(), [&](const Bits& g) { return rest.is_subset_of(g); });
      if (covered) continue;
      for (const auto& gk : g2) fresh.push_back(gk & facet);
    }
    std::sort(fresh.begin(), fresh.end());
    fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
    std::vector<Bits> next = g1;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      bool maximal = true;
      for (std::size_t b = 0; b < fresh.size() && maximal; ++b)
        if (a != b && fresh[a].is_proper_subset_of(fresh[b])) maximal = false;
      for (std::size_t b = 0; b < g1.size() && maximal; ++b)
        if (fresh[a].is_subset_of(g1[b])) maximal = false;
      if (maximal) next.push_back(fresh[a]);
    }
    faces = std::move(next);

    processed.set(j);
    std::erase_if(active, [&](const Bits& f) { return f.is_subset_of(processed); });
    heights.push_back(h);
    h_prev = h;
  }
  return heights;
}

std::vector<long> hsop_degrees(const std::vector<long>& heights, const std::vector<long>& degrees) {
  const std::size_t n = heights.size();
  if (n == 0) return {};
  const long d = heights.back();
  std::size_t ell = n;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (heights[i] == heights[i + 1]) {
      ell = i + 1;
      break;
    }
  }
  std::vector<long> out;
  for (long i = 1; i <= d; ++i) {
    if (static_cast<std::size_t>(i) <= ell) {
      out.push_back(degrees[static_cast<std::size_t>(i - 1)]);
      continue;
    }
    std::size_t ji = 0;
    while (ji < n && heights[ji] != i) ++ji;
    long g = 1;
    for (std::size_t k = ell; k <= ji && k < n; ++k) g = std::lcm(g, degrees[k]);
    out.push_back(g);
  }
  return out;
}

}  // namespace latk
