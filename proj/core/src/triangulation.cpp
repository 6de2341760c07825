#include "latk/triangulation.hpp"

#include <algorithm>

#include "latk/cone.hpp"
#include "latk/error.hpp"
#include "latk/normal_forms.hpp"

namespace latk {

IntegerMatrix simplex_rows(const IntegerMatrix& gens, const SimplicialCone& s) {
  return gens.select_rows(s.generators);
}

IntegerVector barycentric_numerators(const IntegerMatrix& simplex_rows, std::span<const Integer> x) {
  IntegerMatrix adj = adjugate(simplex_rows);
  IntegerVector n = x * adj;
  if (determinant(simplex_rows).sign() < 0)
    for (auto& v : n) v = -v;
  return n;
}

bool in_half_open_cone(const IntegerMatrix& gens, const SimplicialCone& s, std::span<const Integer> x) {
  IntegerVector n = barycentric_numerators(simplex_rows(gens, s), x);
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i].sign() < 0) return false;
    if (n[i].is_zero() && s.excluded[i]) return false;
  }
  return true;
}

namespace {

void check_pointed_full(const IntegerMatrix& gens) {
  const std::size_t d = gens.cols();
  if (gens.rows() == 0 || rank(gens) < d)
    throw Error(ErrorCode::NotFullDimensional, "generators do not span the space");
  DualDescription dual = dualize(gens, d);
  if (kernel_basis(dual.forms).rows() > 0) throw Error(ErrorCode::NotPointed, "cone is not pointed");
}

// Placing triangulation of the cone generated by the rows listed in `order`.
// The rows must span a pointed cone; they need not span the whole space.
std::vector<std::vector<std::size_t>> place(const IntegerMatrix& gens,
                                            const std::vector<std::size_t>& order) {
  const std::size_t d = gens.cols();
  std::vector<std::vector<std::size_t>> simplices{{}};
  IntegerMatrix processed(0, d);
  std::size_t r = 0;
  for (std::size_t idx : order) {
    auto x = gens.row(idx);
    if (is_zero(x)) continue;
    IntegerMatrix trial = processed;
    trial.append_row(x);
    if (rank(trial) > r) {
      for (auto& s : simplices) s.push_back(idx);
      processed = std::move(trial);
      ++r;
      continue;
    }
    DualDescription dual = dualize(processed, d);
    std::vector<std::size_t> visible;
    for (std::size_t f = 0; f < dual.forms.rows(); ++f)
      if (dot(dual.forms.row(f), x).sign() < 0) visible.push_back(f);
    if (visible.empty()) continue;
    std::vector<std::vector<std::size_t>> added;
    for (const auto& s : simplices) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        bool on_visible = false;
        for (std::size_t f : visible) {
          bool all_zero = true;
          for (std::size_t k = 0; k < s.size() && all_zero; ++k)
            if (k != j && !dot(dual.forms.row(f), gens.row(s[k])).is_zero()) all_zero = false;
          if (all_zero) {
            on_visible = true;
            break;
          }
        }
        if (!on_visible) continue;
        std::vector<std::size_t> t;
        for (std::size_t k = 0; k < s.size(); ++k)
          if (k != j) t.push_back(s[k]);
        t.push_back(idx);
        added.push_back(std::move(t));
      }
    }
    for (auto& t : added) simplices.push_back(std::move(t));
    processed = std::move(trial);
  }
  return simplices;
}

// Sign of n.omega with ties broken by the coordinates of n.
int perturbed_sign(std::span<const Integer> n, std::span<const Integer> omega) {
  int s = dot(n, omega).sign();
  if (s != 0) return s;
  for (const auto& v : n)
    if (v.sign() != 0) return v.sign();
  return 0;
}

Triangulation finish(const IntegerMatrix& gens, std::vector<std::vector<std::size_t>> simplices) {
  Triangulation t;
  t.detsum = 0;
  IntegerVector omega(gens.cols());
  for (auto& gs : simplices) {
    SimplicialCone s;
    s.generators = std::move(gs);
    IntegerMatrix m = gens.select_rows(s.generators);
    Integer det = determinant(m);
    if (det.is_zero()) throw Error(ErrorCode::SingularSimplex, "degenerate simplex in triangulation");
    s.determinant = abs(det);
    t.detsum += s.determinant;
    if (t.simplices.empty())
      for (std::size_t i = 0; i < m.rows(); ++i) omega = add(omega, m.row(i));
    IntegerMatrix adj = adjugate(m);
    s.excluded.assign(m.rows(), false);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      IntegerVector normal(m.cols());
      for (std::size_t c = 0; c < m.cols(); ++c) normal[c] = det.sign() < 0 ? -adj(c, i) : adj(c, i);
      s.excluded[i] = perturbed_sign(normal, omega) < 0;
    }
    t.simplices.push_back(std::move(s));
  }
  return t;
}

}  // namespace

Triangulation lex_triangulation(const IntegerMatrix& gens) {
  check_pointed_full(gens);
  std::vector<std::size_t> order(gens.rows());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  return finish(gens, place(gens, order));
}

std::vector<BottomFacet> bottom_facets(const IntegerMatrix& gens, std::span<const Integer> z) {
  const std::size_t d = gens.cols();
  check_pointed_full(gens);
  IntegerMatrix hom(0, d + 1);
  for (std::size_t i = 0; i < gens.rows(); ++i) {
    IntegerVector v(gens.row(i).begin(), gens.row(i).end());
    v.push_back(1);
    hom.append_row(v);
  }
  if (!is_zero(z)) {
    IntegerVector v(z.begin(), z.end());
    v.push_back(0);
    hom.append_row(v);
  }
  DualDescription dual = dualize(hom, d + 1);
  std::vector<IntegerVector> forms;
  for (std::size_t f = 0; f < dual.forms.rows(); ++f)
    if (dual.forms(f, d).sign() < 0) forms.push_back(dual.forms.row_vector(f));
  // All points on one affine hyperplane (only possible with z = 0): the whole
  // polytope is the single bottom facet.
  for (std::size_t e = 0; e < dual.equations.rows(); ++e) {
    IntegerVector eq = dual.equations.row_vector(e);
    if (eq[d].is_zero()) continue;
    if (eq[d].sign() > 0) eq = scale(eq, Integer(-1));
    forms.push_back(eq);
  }
  std::vector<BottomFacet> out;
  for (auto& f : forms) {
    BottomFacet b;
    for (std::size_t i = 0; i < gens.rows(); ++i)
      if (dot(std::span<const Integer>(f).first(d), gens.row(i)) + f[d] == Integer(0))
        b.generators.push_back(i);
    b.form = std::move(f);
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(),
            [](const BottomFacet& a, const BottomFacet& b) { return a.generators < b.generators; });
  return out;
}

Triangulation bottom_triangulation(const IntegerMatrix& gens) {
  check_pointed_full(gens);
  DualDescription dual = dualize(gens, gens.cols());
  std::vector<std::size_t> ext = extreme_ray_indices(gens, dual.forms, 0);
  auto facets = bottom_facets(gens, gens.row(ext.front()));
  std::vector<std::vector<std::size_t>> simplices;
  for (const auto& f : facets) {
    auto part = place(gens, f.generators);
    for (auto& s : part) simplices.push_back(std::move(s));
  }
  return finish(gens, std::move(simplices));
}

Rational roughness(const IntegerMatrix& gens, std::span<const Integer> grading) {
  if (gens.rows() == 0) return Rational(1);
  Integer lo, hi;
  for (std::size_t i = 0; i < gens.rows(); ++i) {
    Integer d = dot(grading, gens.row(i));
    if (d.sign() <= 0) throw Error(ErrorCode::NonPositiveDegree, "generator of nonpositive degree");
    if (i == 0 || d < lo) lo = d;
    if (i == 0 || d > hi) hi = d;
  }
  return Rational(hi, lo);
}

}  // namespace latk
