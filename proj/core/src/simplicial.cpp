#include "latk/simplicial.hpp"

#include <algorithm>
#include <numeric>

#include "latk/error.hpp"
#include "latk/normal_forms.hpp"

namespace latk {

std::vector<IntegerVector> parallelotope_points(const IntegerMatrix& rays,
                                                const std::vector<bool>& excluded) {
  const std::size_t d = rays.rows();
  if (rays.cols() != d) throw Error(ErrorCode::SingularSimplex, "simplex is not square");
  Integer det = determinant(rays);
  if (det.is_zero()) throw Error(ErrorCode::SingularSimplex, "rays are linearly dependent");
  const Integer vol = abs(det);
  IntegerMatrix adj = adjugate(rays);
  if (det.sign() < 0)
    for (std::size_t r = 0; r < d; ++r) adj.negate_row(r);

  // Residues of Z^d modulo the row lattice: c * V^{-1} with 0 <= c_i < s_i.
  SmithForm snf = smith_normal_form(rays);
  IntegerMatrix vinv = unimodular_inverse(snf.V);

  std::vector<IntegerVector> out;
  if (vol.fits_int64() && vol.to_int64() > 0) out.reserve(static_cast<std::size_t>(vol.to_int64()));
  IntegerVector c(d);
  for (;;) {
    IntegerVector x = c * vinv;
    IntegerVector num = x * adj;
    for (std::size_t i = 0; i < d; ++i) {
      Integer q = floor_div(num[i], vol);
      if (!q.is_zero())
        for (std::size_t j = 0; j < d; ++j) x[j] -= q * rays(i, j);
      if (!excluded.empty() && excluded[i] && (num[i] - q * vol).is_zero())
        for (std::size_t j = 0; j < d; ++j) x[j] += rays(i, j);
    }
    out.push_back(std::move(x));
    std::size_t k = 0;
    while (k < d) {
      c[k] += 1;
      if (c[k] < snf.diag[k]) break;
      c[k] = 0;
      ++k;
    }
    if (k == d) break;
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return lex_less(a, b); });
  return out;
}

std::vector<IntegerVector> local_candidates(const std::vector<IntegerVector>& points,
                                            const IntegerMatrix& rays) {
  const std::size_t d = rays.rows();
  IntegerMatrix adj = adjugate(rays);
  if (determinant(rays).sign() < 0)
    for (std::size_t r = 0; r < d; ++r) adj.negate_row(r);

  struct Cand {
    IntegerVector v;
    IntegerVector bary;
    Integer total;
  };
  std::vector<Cand> cands;
  auto push = [&](std::span<const Integer> v) {
    Cand c{IntegerVector(v.begin(), v.end()), v * adj, 0};
    for (const auto& b : c.bary) c.total += b;
    cands.push_back(std::move(c));
  };
  for (std::size_t i = 0; i < d; ++i) push(rays.row(i));
  for (const auto& p : points)
    if (!is_zero(p)) push(p);
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.total != b.total) return a.total < b.total;
    return lex_less(a.v, b.v);
  });
  cands.erase(std::unique(cands.begin(), cands.end(),
                          [](const Cand& a, const Cand& b) { return a.v == b.v; }),
              cands.end());

  std::vector<IntegerVector> kept;
  std::vector<const Cand*> kept_c;
  for (const auto& y : cands) {
    bool reducible = false;
    for (const Cand* x : kept_c) {
      if (!(x->total < y.total)) continue;
      bool below = true;
      for (std::size_t i = 0; i < d && below; ++i)
        if (x->bary[i] > y.bary[i]) below = false;
      if (below) {
        reducible = true;
        break;
      }
    }
    if (!reducible) {
      kept_c.push_back(&y);
      kept.push_back(y.v);
    }
  }
  return kept;
}

std::vector<StanleyComponent> stanley_components(const SimplicialCone& simplex,
                                                 const std::vector<IntegerVector>& points) {
  std::vector<StanleyComponent> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back({p, simplex.generators});
  return out;
}

}  // namespace latk
