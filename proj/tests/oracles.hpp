#pragma once

// Independent reference computations on small machine-integer data. Nothing
// here calls into the library; the helpers at the bottom only convert types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "latk/matrix.hpp"

namespace oracle {

using Vec = std::vector<long long>;
using Mat = std::vector<Vec>;

inline long long dot(const Vec& a, const Vec& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline long long gcd_all(const Vec& v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, x);
  return g;
}

inline Vec primitive(Vec v) {
  long long g = gcd_all(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

/// Laplace expansion; fine for the tiny sizes used in tests.
inline __int128 det(const Mat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  __int128 s = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Mat minor;
    for (std::size_t r = 1; r < n; ++r) {
      Vec row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    __int128 term = static_cast<__int128>(m[0][c]) * det(minor);
    s += (c % 2 == 0) ? term : -term;
  }
  return s;
}

/// Rank by testing square minors of every size.
inline std::size_t rank(const Mat& rows, std::size_t dim) {
  std::size_t best = 0;
  const std::size_t n = rows.size();
  for (std::size_t k = 1; k <= std::min(n, dim); ++k) {
    bool found = false;
    std::vector<bool> rsel(n, false), csel(dim, false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
      do {
        Mat sub;
        for (std::size_t r = 0; r < n; ++r) {
          if (!rsel[r]) continue;
          Vec row;
          for (std::size_t c = 0; c < dim; ++c)
            if (csel[c]) row.push_back(rows[r][c]);
          sub.push_back(row);
        }
        if (det(sub) != 0) found = true;
      } while (!found && std::prev_permutation(csel.begin(), csel.end()));
    } while (!found && std::prev_permutation(rsel.begin(), rsel.end()));
    if (!found) break;
    best = k;
  }
  return best;
}

/// Vector orthogonal to the d-1 rows (generalized cross product).
inline Vec normal_of(const Mat& rows, std::size_t d) {
  Vec n(d);
  for (std::size_t i = 0; i < d; ++i) {
    Mat m;
    for (const auto& r : rows) {
      Vec row;
      for (std::size_t c = 0; c < d; ++c)
        if (c != i) row.push_back(r[c]);
      m.push_back(row);
    }
    long long v = static_cast<long long>(det(m));
    n[i] = ((i + d - 1) % 2 == 0) ? v : -v;
  }
  return n;
}

/// Primitive inner facet normals of a full-dimensional cone in dimension 2 or 3,
/// found by trying every (d-1)-subset of generators.
inline Mat facets(const Mat& gens, std::size_t d) {
  std::set<Vec> out;
  const std::size_t n = gens.size();
  std::vector<bool> sel(n, false);
  std::fill(sel.begin(), sel.begin() + static_cast<long>(d - 1), true);
  do {
    Mat sub;
    for (std::size_t i = 0; i < n; ++i)
      if (sel[i]) sub.push_back(gens[i]);
    Vec nv = normal_of(sub, d);
    if (gcd_all(nv) == 0) continue;
    nv = primitive(nv);
    bool pos = true, neg = true;
    for (const auto& g : gens) {
      long long v = dot(nv, g);
      if (v < 0) pos = false;
      if (v > 0) neg = false;
    }
    if (neg && !pos)
      for (auto& x : nv) x = -x;
    if (pos || neg) out.insert(nv);
  } while (std::prev_permutation(sel.begin(), sel.end()));
  return {out.begin(), out.end()};
}

inline bool in_cone(const Mat& facets, const Vec& x) {
  for (const auto& f : facets)
    if (dot(f, x) < 0) return false;
  return true;
}

/// Primitive extreme rays: generators lying on facets of rank d-1.
inline Mat extreme_rays(const Mat& gens, const Mat& facets, std::size_t d) {
  std::set<Vec> out;
  for (const auto& g : gens) {
    Mat on;
    for (const auto& f : facets)
      if (dot(f, g) == 0) on.push_back(f);
    if (rank(on, d) == d - 1) out.insert(primitive(g));
  }
  return {out.begin(), out.end()};
}

inline long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

/// Lattice points of the cone with first coordinate k, all other coordinates
/// in [-bound, bound]. Dimension 2 or 3.
inline Mat slice_points(const Mat& facets, std::size_t d, long long k, long long bound) {
  Mat out;
  if (d == 2) {
    for (long long y = -bound; y <= bound; ++y)
      if (in_cone(facets, {k, y})) out.push_back({k, y});
    return out;
  }
  for (long long y = -bound; y <= bound; ++y) {
    long long lo = -bound, hi = bound;
    bool ok = true;
    for (const auto& f : facets) {
      long long rest = f[0] * k + f[1] * y;
      if (f[2] > 0) lo = std::max(lo, ceil_div(-rest, f[2]));
      else if (f[2] < 0) hi = std::min(hi, floor_div(rest, -f[2]));
      else if (rest < 0) ok = false;
    }
    if (!ok) continue;
    for (long long z = lo; z <= hi; ++z) out.push_back({k, y, z});
  }
  return out;
}

/// Number of lattice points of the cone with first coordinate k.
inline long long count_slice(const Mat& facets, std::size_t d, long long k, long long bound) {
  if (d == 2) return static_cast<long long>(slice_points(facets, d, k, bound).size());
  long long count = 0;
  for (long long y = -bound; y <= bound; ++y) {
    long long lo = -bound, hi = bound;
    bool ok = true;
    for (const auto& f : facets) {
      long long rest = f[0] * k + f[1] * y;
      if (f[2] > 0) lo = std::max(lo, ceil_div(-rest, f[2]));
      else if (f[2] < 0) hi = std::min(hi, floor_div(rest, -f[2]));
      else if (rest < 0) ok = false;
    }
    if (ok && hi >= lo) count += hi - lo + 1;
  }
  return count;
}

/// Irreducible lattice points of a pointed cone among the given points
/// (all nonzero points up to some degree bound): x is irreducible iff no
/// other nonzero point y of the cone has x - y in the cone.
inline Mat irreducibles(const Mat& points, const Mat& facets) {
  Mat out;
  for (const auto& x : points) {
    bool reducible = false;
    for (const auto& y : points) {
      if (y == x) continue;
      Vec diff(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - y[i];
      bool zero = std::all_of(diff.begin(), diff.end(), [](long long v) { return v == 0; });
      if (!zero && in_cone(facets, diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Height of the monomial ideal generated by the first j rays for every j:
/// d minus the largest dimension of a face avoiding those rays. Faces are
/// enumerated as all intersections of facets.
inline std::vector<long> face_lattice_heights(const Mat& rays, const Mat& facets, std::size_t d) {
  const std::size_t n = rays.size(), s = facets.size();
  std::set<std::vector<bool>> faces;
  for (std::size_t mask = 0; mask < (std::size_t{1} << s); ++mask) {
    std::vector<bool> in(n, true);
    for (std::size_t f = 0; f < s; ++f) {
      if (!(mask >> f & 1)) continue;
      for (std::size_t i = 0; i < n; ++i)
        if (dot(facets[f], rays[i]) != 0) in[i] = false;
    }
    faces.insert(in);
  }
  std::vector<long> heights;
  for (std::size_t j = 1; j <= n; ++j) {
    std::size_t best = 0;
    for (const auto& face : faces) {
      bool avoids = true;
      for (std::size_t i = 0; i < j; ++i)
        if (face[i]) avoids = false;
      if (!avoids) continue;
      Mat members;
      for (std::size_t i = 0; i < n; ++i)
        if (face[i]) members.push_back(rays[i]);
      best = std::max(best, rank(members, d));
    }
    heights.push_back(static_cast<long>(d - best));
  }
  return heights;
}

/// gcd of all maximal minors of an s x d matrix (s >= d).
inline long long maximal_minor_gcd(const Mat& m, std::size_t d) {
  const std::size_t s = m.size();
  long long g = 0;
  std::vector<bool> sel(s, false);
  std::fill(sel.begin(), sel.begin() + static_cast<long>(d), true);
  do {
    Mat sub;
    for (std::size_t i = 0; i < s; ++i)
      if (sel[i]) sub.push_back(m[i]);
    long long v = static_cast<long long>(det(sub));
    g = std::gcd(g, v < 0 ? -v : v);
  } while (std::prev_permutation(sel.begin(), sel.end()));
  return g;
}

/// Barycentric coordinates of x in the basis `rows` as numerators over det.
inline Vec barycentric(const Mat& rows, const Vec& x, long long& den) {
  const std::size_t d = rows.size();
  den = static_cast<long long>(det(rows));
  Vec out(d);
  for (std::size_t i = 0; i < d; ++i) {
    Mat m = rows;
    m[i] = x;
    out[i] = static_cast<long long>(det(m));
  }
  if (den < 0) {
    den = -den;
    for (auto& v : out) v = -v;
  }
  return out;
}

/// Whether v is an integer combination of the (independent) basis rows.
inline bool in_integer_span(const Mat& basis, const Vec& v) {
  const std::size_t r = basis.size();
  const std::size_t d = v.size();
  if (r == 0) return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
  std::vector<bool> sel(d, false);
  std::fill(sel.begin(), sel.begin() + static_cast<long>(r), true);
  do {
    Mat sub;
    Vec vs;
    for (const auto& b : basis) {
      Vec row;
      for (std::size_t c = 0; c < d; ++c)
        if (sel[c]) row.push_back(b[c]);
      sub.push_back(row);
    }
    for (std::size_t c = 0; c < d; ++c)
      if (sel[c]) vs.push_back(v[c]);
    __int128 den = det(sub);
    if (den == 0) continue;
    Vec coef(r);
    for (std::size_t i = 0; i < r; ++i) {
      Mat m = sub;
      m[i] = vs;
      __int128 num = det(m);
      if (num % den != 0) return false;
      coef[i] = static_cast<long long>(num / den);
    }
    for (std::size_t c = 0; c < d; ++c) {
      long long s = 0;
      for (std::size_t i = 0; i < r; ++i) s += coef[i] * basis[i][c];
      if (s != v[c]) return false;
    }
    return true;
  } while (std::prev_permutation(sel.begin(), sel.end()));
  return false;
}

/// Random cone generators: first coordinate in [1, max_first], others in
/// [-7, 7], full-dimensional.
inline Mat random_generators(std::mt19937_64& rng, std::size_t d, std::size_t count, long long max_first = 7) {
  std::uniform_int_distribution<long long> first(1, max_first), rest(-7, 7);
  for (;;) {
    Mat g;
    for (std::size_t i = 0; i < count; ++i) {
      Vec v{first(rng)};
      for (std::size_t c = 1; c < d; ++c) v.push_back(rest(rng));
      g.push_back(v);
    }
    if (rank(g, d) == d) return g;
  }
}

inline latk::IntegerMatrix to_matrix(const Mat& m, std::size_t d) {
  latk::IntegerMatrix out(0, d);
  for (const auto& r : m) {
    latk::IntegerVector v(r.begin(), r.end());
    out.append_row(v);
  }
  return out;
}

inline Vec to_vec(std::span<const latk::Integer> v) {
  Vec out;
  for (const auto& x : v) out.push_back(x.to_int64());
  return out;
}

inline Mat to_mat(const latk::IntegerMatrix& m) {
  Mat out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_vec(m.row(i)));
  return out;
}

inline Mat to_mat(const std::vector<latk::IntegerVector>& rows) {
  Mat out;
  for (const auto& r : rows) out.push_back(to_vec(r));
  return out;
}

}  // namespace oracle
