#include "latk/inhomogeneous.hpp"

#include <algorithm>
#include <set>

#include "latk/error.hpp"
#include "latk/normal_forms.hpp"
#include "latk/simplicial.hpp"
#include "latk/triangulation.hpp"

namespace latk {

namespace {

IntegerVector extend(std::span<const Integer> v, const Integer& last) {
  IntegerVector out(v.begin(), v.end());
  out.push_back(last);
  return out;
}

}  // namespace

Homogenized homogenize(const InputSystem& in) {
  const std::size_t d = in.dim;
  Homogenized h;
  if (!in.inhomogeneous()) {
    h.system = {d, in.cone, in.inequalities, in.equations, in.congruences, in.grading};
    return h;
  }

  HomogeneousSystem& s = h.system;
  if (in.dehomogenization) {
    if (in.vertices.rows() || in.inhom_inequalities.rows() || in.inhom_equations.rows() ||
        in.inhom_congruences.rows())
      throw Error(ErrorCode::InvalidInput,
                  "a dehomogenization form cannot be combined with vertices or inhom_ sections");
    s = {d, in.cone, in.inequalities, in.equations, in.congruences, in.grading};
    if (is_zero(*in.dehomogenization)) throw Error(ErrorCode::InvalidInput, "dehomogenization form is zero");
    s.inequalities.append_row(*in.dehomogenization);
    h.level = *in.dehomogenization;
  } else {
    const std::size_t n = d + 1;
    s.dim = n;
    s.inequalities = IntegerMatrix(0, n);
    s.equations = IntegerMatrix(0, n);
    s.congruences = IntegerMatrix(0, n + 1);
    s.generators = IntegerMatrix(0, n);
    for (std::size_t i = 0; i < in.inequalities.rows(); ++i)
      s.inequalities.append_row(extend(in.inequalities.row(i), 0));
    s.inequalities.append_rows(in.inhom_inequalities);
    s.inequalities.append_row(unit_vector(n, d));
    for (std::size_t i = 0; i < in.equations.rows(); ++i)
      s.equations.append_row(extend(in.equations.row(i), 0));
    s.equations.append_rows(in.inhom_equations);
    for (std::size_t i = 0; i < in.congruences.rows(); ++i) {
      auto row = in.congruences.row(i);
      IntegerVector r(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(d));
      r.push_back(0);
      r.push_back(row[d]);
      s.congruences.append_row(r);
    }
    s.congruences.append_rows(in.inhom_congruences);
    for (std::size_t i = 0; i < in.cone.rows(); ++i) s.generators.append_row(extend(in.cone.row(i), 0));
    s.generators.append_rows(in.vertices);
    if (in.vertices.rows() == 0 && in.cone.rows() > 0) s.generators.append_row(unit_vector(n, d));
    if (in.grading) s.grading = extend(*in.grading, 0);
    h.level = unit_vector(n, d);
  }

  // The affine system at level 1 must have an integer solution.
  IntegerMatrix eqs = s.equations.rows() ? s.equations : IntegerMatrix(0, s.dim);
  eqs.append_row(*h.level);
  IntegerVector rhs(eqs.rows());
  rhs.back() = 1;
  IntegerMatrix cong(0, s.dim);
  IntegerVector cong_rhs, moduli;
  for (std::size_t i = 0; i < s.congruences.rows(); ++i) {
    auto row = s.congruences.row(i);
    cong.append_row(row.first(s.dim));
    cong_rhs.push_back(0);
    moduli.push_back(row[s.dim]);
  }
  if (!solve_diophantine(s.dim, eqs, rhs, cong, cong_rhs, moduli))
    throw Error(ErrorCode::EmptyLattice, "the affine lattice of the input is empty");
  return h;
}

LevelSplit split_levels(const std::vector<IntegerVector>& basis, std::span<const Integer> level) {
  LevelSplit out;
  for (const auto& x : basis) {
    Integer l = dot(level, x);
    if (l == Integer(1)) out.module_generators.push_back(x);
    else if (l.is_zero()) out.recession_basis.push_back(x);
  }
  return out;
}

std::size_t module_rank_residues(const std::vector<IntegerVector>& module_generators,
                                 const std::vector<IntegerVector>& recession_basis,
                                 const IntegerMatrix& units) {
  if (module_generators.empty()) return 0;
  const std::size_t n = module_generators.front().size();
  IntegerMatrix group = IntegerMatrix::from_rows(recession_basis, n);
  group.append_rows(units);
  IntegerMatrix hnf = lattice_basis(group);
  std::set<IntegerVector, bool (*)(const IntegerVector&, const IntegerVector&)> classes(
      [](const IntegerVector& a, const IntegerVector& b) { return lex_less(a, b); });
  for (const auto& y : module_generators) classes.insert(reduce_modulo(y, hnf));
  return classes.size();
}

std::size_t module_rank_polytope(const ComputedCone& cone, std::span<const Integer> level) {
  const std::size_t k = cone.dim;
  IntegerMatrix rec(0, k);
  bool any_positive = false;
  for (std::size_t i = 0; i < cone.extreme_rays.rows(); ++i) {
    Integer l = dot(level, cone.extreme_rays.row(i));
    if (l.is_zero()) rec.append_row(cone.extreme_rays.row(i));
    else any_positive = true;
  }
  rec.append_rows(cone.maximal_subspace);
  if (!any_positive) return 0;

  IntegerMatrix span = rec.rows() ? saturation(rec) : IntegerMatrix(0, k);
  SublatticeSplit split = split_sublattice(span, k);
  const std::size_t q = k - split.sub_rank;
  std::vector<IntegerVector> rays;
  for (std::size_t i = 0; i < cone.extreme_rays.rows(); ++i) {
    IntegerVector p = split.project(cone.extreme_rays.row(i));
    if (!is_zero(p)) rays.push_back(make_primitive(p));
  }
  std::sort(rays.begin(), rays.end(), [](const auto& a, const auto& b) { return lex_less(a, b); });
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  IntegerVector lev = split.section * level;
  IntegerMatrix gens = IntegerMatrix::from_rows(rays, q);

  Triangulation tri = lex_triangulation(gens);
  std::size_t count = 0;
  for (const auto& s : tri.simplices) {
    IntegerMatrix m = simplex_rows(gens, s);
    std::size_t level_one_rays = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (dot(lev, m.row(i)) == Integer(1)) ++level_one_rays;
    for (const auto& u : parallelotope_points(m, s.excluded)) {
      Integer l = dot(lev, u);
      if (l == Integer(1)) ++count;
      else if (l.is_zero()) count += level_one_rays;
    }
  }
  return count;
}

void add_level_one_components(SeriesAccumulator& acc, std::span<const Integer> offset,
                              const IntegerMatrix& rays, std::span<const Integer> level,
                              std::span<const Integer> grading) {
  Integer lu = dot(level, offset);
  if (lu > Integer(1)) return;
  std::vector<long> rec_degrees;
  std::vector<std::size_t> level_one;
  for (std::size_t i = 0; i < rays.rows(); ++i) {
    Integer l = dot(level, rays.row(i));
    if (l.is_zero()) rec_degrees.push_back(dot(grading, rays.row(i)).to_int64());
    else if (l == Integer(1)) level_one.push_back(i);
  }
  if (lu == Integer(1)) {
    acc.add(dot(grading, offset).to_int64(), rec_degrees);
    return;
  }
  for (std::size_t j : level_one)
    acc.add((dot(grading, offset) + dot(grading, rays.row(j))).to_int64(), rec_degrees);
}

}  // namespace latk
