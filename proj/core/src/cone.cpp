#include "latk/cone.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>

#include "latk/error.hpp"
#include "latk/normal_forms.hpp"

namespace latk {

LatticeTransform LatticeTransform::identity(std::size_t n) {
  return {IntegerMatrix::identity(n), IntegerMatrix::identity(n), Integer(1)};
}

LatticeTransform LatticeTransform::from_basis(const IntegerMatrix& basis) {
  const std::size_t k = basis.rows();
  const std::size_t n = basis.cols();
  SmithForm f = smith_normal_form(basis);
  if (f.rank != k) throw Error(ErrorCode::Internal, "lattice basis is not of full row rank");
  Integer den = k == 0 ? Integer(1) : f.diag[k - 1];
  IntegerMatrix sp(n, k);
  for (std::size_t i = 0; i < k; ++i) sp(i, i) = den / f.diag[i];
  LatticeTransform t;
  t.embedding = basis;
  t.projection = f.V * sp * f.U;
  t.denominator = den;
  return t;
}

IntegerVector LatticeTransform::to_ambient(std::span<const Integer> y) const {
  if (embedding.rows() == 0) return IntegerVector(embedding.cols());
  return y * embedding;
}

std::optional<IntegerVector> LatticeTransform::to_working(std::span<const Integer> x) const {
  if (embedding.rows() == 0) {
    if (!is_zero(x)) return std::nullopt;
    return IntegerVector{};
  }
  IntegerVector y = x * projection;
  for (auto& v : y) {
    if (!(v % denominator).is_zero()) return std::nullopt;
    v /= denominator;
  }
  IntegerVector back = y * embedding;
  if (!std::equal(back.begin(), back.end(), x.begin(), x.end())) return std::nullopt;
  return y;
}

IntegerVector LatticeTransform::form_to_working(std::span<const Integer> form) const {
  return embedding * form;
}

namespace {

using Bits = boost::dynamic_bitset<>;

struct DDRay {
  IntegerVector v;
  Bits zeros;
};

// Representative of r modulo span(lin) orthogonal to the lineality space.
IntegerVector orthogonal_representative(const IntegerVector& r, const IntegerMatrix& lin) {
  if (lin.rows() == 0) return make_primitive(r);
  const std::size_t l = lin.rows();
  IntegerMatrix gram(l, l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) gram(i, j) = dot(lin.row(i), lin.row(j));
  IntegerVector rhs(l);
  for (std::size_t i = 0; i < l; ++i) rhs[i] = dot(lin.row(i), r);
  std::vector<Rational> y;
  if (!solve_left_rational(gram, rhs, y)) throw Error(ErrorCode::Internal, "singular Gram matrix");
  Integer den = 1;
  for (const auto& q : y) den = lcm(den, q.denominator());
  IntegerVector out = scale(r, den);
  for (std::size_t i = 0; i < l; ++i) {
    Integer c = y[i].numerator() * (den / y[i].denominator());
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] -= c * lin(i, j);
  }
  return make_primitive(out);
}

}  // namespace

ConeDescription cone_from_inequalities(const IntegerMatrix& inequalities, std::size_t n) {
  std::vector<IntegerVector> ineqs;
  for (std::size_t i = 0; i < inequalities.rows(); ++i) {
    if (inequalities.cols() != n) throw Error(ErrorCode::Internal, "inequality width mismatch");
    if (!is_zero(inequalities.row(i))) ineqs.push_back(make_primitive(inequalities.row(i)));
  }
  const std::size_t m = ineqs.size();
  std::vector<IntegerVector> lin;
  for (std::size_t i = 0; i < n; ++i) lin.push_back(unit_vector(n, i));
  std::vector<DDRay> rays;

  for (std::size_t idx = 0; idx < m; ++idx) {
    const IntegerVector& a = ineqs[idx];
    std::size_t piv = lin.size();
    for (std::size_t j = 0; j < lin.size(); ++j) {
      if (!dot(a, lin[j]).is_zero()) {
        piv = j;
        break;
      }
    }
    if (piv < lin.size()) {
      // a is not constant on the lineality space: split off one direction.
      IntegerVector l = lin[piv];
      Integer al = dot(a, l);
      if (al.sign() < 0) {
        l = scale(l, Integer(-1));
        al = -al;
      }
      lin.erase(lin.begin() + static_cast<std::ptrdiff_t>(piv));
      for (auto& v : lin) {
        Integer av = dot(a, v);
        if (!av.is_zero()) v = make_primitive(subtract(scale(v, al), scale(l, av)));
      }
      for (auto& r : rays) {
        Integer ar = dot(a, r.v);
        if (!ar.is_zero()) r.v = make_primitive(subtract(scale(r.v, al), scale(l, ar)));
        r.zeros.set(idx);
      }
      Bits z(m);
      for (std::size_t p = 0; p < idx; ++p) z.set(p);
      rays.push_back({make_primitive(l), std::move(z)});
      continue;
    }

    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(a, rays[r].v);
      if (val[r].sign() > 0) pos.push_back(r);
      else if (val[r].sign() < 0) neg.push_back(r);
    }
    if (neg.empty()) {
      for (std::size_t r = 0; r < rays.size(); ++r)
        if (val[r].is_zero()) rays[r].zeros.set(idx);
      continue;
    }
    const std::size_t face_rank_bound = n - lin.size();
    std::vector<DDRay> next;
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        Bits common = rays[p].zeros & rays[q].zeros;
        if (face_rank_bound >= 2 && common.count() + 2 < face_rank_bound) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        IntegerVector w = subtract(scale(rays[q].v, val[p]), scale(rays[p].v, val[q]));
        common.set(idx);
        next.push_back({make_primitive(w), std::move(common)});
      }
    }
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (val[r].sign() < 0) continue;
      if (val[r].is_zero()) rays[r].zeros.set(idx);
      next.push_back(std::move(rays[r]));
    }
    rays = std::move(next);
  }

  ConeDescription out;
  out.lineality = saturation(IntegerMatrix::from_rows(lin, n));
  std::vector<IntegerVector> reps;
  for (const auto& r : rays) reps.push_back(orthogonal_representative(r.v, out.lineality));
  std::sort(reps.begin(), reps.end(), [](const auto& x, const auto& y) { return lex_less(x, y); });
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  out.rays = IntegerMatrix::from_rows(reps, n);
  return out;
}

DualDescription dualize(const IntegerMatrix& rays, std::size_t n) {
  ConeDescription d = cone_from_inequalities(rays, n);
  return {std::move(d.rays), std::move(d.lineality)};
}

std::vector<std::size_t> extreme_ray_indices(const IntegerMatrix& gens, const IntegerMatrix& forms,
                                             std::size_t lineality_dim) {
  const std::size_t n = gens.cols();
  std::vector<std::size_t> out;
  std::vector<Bits> seen;
  for (std::size_t g = 0; g < gens.rows(); ++g) {
    Bits z(forms.rows());
    IntegerMatrix tight(0, n);
    for (std::size_t f = 0; f < forms.rows(); ++f) {
      if (dot(forms.row(f), gens.row(g)).is_zero()) {
        z.set(f);
        tight.append_row(forms.row(f));
      }
    }
    if (n < lineality_dim + 1 || rank(tight) != n - lineality_dim - 1) continue;
    if (std::find(seen.begin(), seen.end(), z) != seen.end()) continue;
    seen.push_back(z);
    out.push_back(g);
  }
  return out;
}

Integer ComputedCone::degree(std::span<const Integer> x) const {
  if (!grading) throw Error(ErrorCode::NotGraded, "no grading available");
  return dot(*grading, x);
}

IntegerVector ComputedCone::lift(std::span<const Integer> y) const {
  return reduce_modulo(transform.to_ambient(y), ambient_units);
}

bool ComputedCone::contains(std::span<const Integer> x) const {
  for (std::size_t f = 0; f < support_forms.rows(); ++f)
    if (dot(support_forms.row(f), x).sign() < 0) return false;
  return true;
}

namespace {

IntegerMatrix working_inequalities(const IntegerMatrix& ineqs, const IntegerMatrix& basis) {
  IntegerMatrix out(0, basis.rows());
  for (std::size_t i = 0; i < ineqs.rows(); ++i) {
    IntegerVector w = basis * ineqs.row(i);
    if (!is_zero(w)) out.append_row(make_primitive(w));
  }
  return out;
}

IntegerMatrix support_forms_of(const ConeDescription& desc, std::size_t k) {
  IntegerMatrix rows = desc.rays;
  if (rows.cols() != k) rows = IntegerMatrix(0, k);
  for (std::size_t i = 0; i < desc.lineality.rows(); ++i) {
    rows.append_row(desc.lineality.row(i));
    rows.append_row(scale(desc.lineality.row(i), Integer(-1)));
  }
  if (rows.rows() == 0) return IntegerMatrix(0, k);
  return cone_from_inequalities(rows, k).rays;
}

}  // namespace

ComputedCone preprocess(const HomogeneousSystem& system, bool normalize_grading) {
  const std::size_t d = system.dim;
  IntegerMatrix ineqs = system.inequalities.rows() ? system.inequalities : IntegerMatrix(0, d);
  IntegerMatrix eqs = system.equations.rows() ? system.equations : IntegerMatrix(0, d);
  if (system.generators.rows() > 0) {
    DualDescription dual = dualize(system.generators, d);
    ineqs.append_rows(dual.forms);
    eqs.append_rows(dual.equations);
  }
  IntegerMatrix cong(0, d);
  IntegerVector moduli;
  for (std::size_t i = 0; i < system.congruences.rows(); ++i) {
    auto row = system.congruences.row(i);
    cong.append_row(row.first(d));
    moduli.push_back(row[d]);
  }
  IntegerVector zeros_b(eqs.rows()), zeros_c(cong.rows());
  auto lat = solve_diophantine(d, eqs, zeros_b, cong, zeros_c, moduli);
  if (!lat) throw Error(ErrorCode::Internal, "homogeneous system without solution");
  IntegerMatrix basis = lat->lattice;

  std::size_t k = basis.rows();
  ConeDescription desc = cone_from_inequalities(working_inequalities(ineqs, basis), k);
  IntegerMatrix span = desc.rays;
  span.append_rows(desc.lineality);
  const std::size_t r = span.rows() ? rank(span) : 0;
  if (r < k) {
    IntegerMatrix sat = r ? saturation(span) : IntegerMatrix(0, k);
    basis = r ? sat * basis : IntegerMatrix(0, d);
    k = r;
    desc = cone_from_inequalities(working_inequalities(ineqs, basis), k);
  }

  ComputedCone cone;
  cone.dim = k;
  cone.transform = LatticeTransform::from_basis(basis);
  cone.extreme_rays = desc.rays.cols() == k ? desc.rays : IntegerMatrix(0, k);
  cone.maximal_subspace = desc.lineality.cols() == k ? desc.lineality : IntegerMatrix(0, k);
  cone.support_forms = support_forms_of(desc, k);
  if (!cone.maximal_subspace.empty()) {
    cone.ambient_units = lattice_basis(cone.maximal_subspace * basis);
  } else {
    cone.ambient_units = IntegerMatrix(0, d);
  }

  cone.generators = cone.extreme_rays;
  if (system.generators.rows() > 0) {
    IntegerMatrix gens(0, k);
    bool ok = true;
    for (std::size_t i = 0; i < system.generators.rows() && ok; ++i) {
      if (is_zero(system.generators.row(i))) continue;
      auto y = cone.transform.to_working(system.generators.row(i));
      if (!y) ok = false;
      else gens.append_row(*y);
    }
    if (ok) {
      cone.generators = gens;
      cone.generators_from_input = true;
    }
  }

  if (system.grading) {
    if (system.grading->size() != d) throw Error(ErrorCode::InvalidInput, "grading has wrong length");
    IntegerVector g = cone.transform.form_to_working(*system.grading);
    if (normalize_grading) {
      Integer c = content(g);
      if (!c.is_zero() && !(c == Integer(1))) {
        for (auto& x : g) x /= c;
        cone.grading_denominator = c;
      }
    }
    cone.grading = g;
  }
  return cone;
}

namespace {

ComputedCone quotient_impl(const ComputedCone& cone) {
  SublatticeSplit split = split_sublattice(cone.maximal_subspace, cone.dim);
  const std::size_t k = cone.dim - split.sub_rank;
  ComputedCone q;
  q.dim = k;
  q.quotient = true;
  q.ambient_units = cone.ambient_units;
  q.grading_denominator = cone.grading_denominator;
  q.grading_implicit = cone.grading_implicit;
  q.maximal_subspace = IntegerMatrix(0, k);

  q.transform.embedding = k ? split.section * cone.transform.embedding
                            : IntegerMatrix(0, cone.transform.ambient_dim());
  IntegerMatrix qlast(cone.dim, k);
  for (std::size_t i = 0; i < cone.dim; ++i)
    for (std::size_t j = 0; j < k; ++j) qlast(i, j) = split.q(i, split.sub_rank + j);
  q.transform.projection = cone.transform.projection * qlast;
  q.transform.denominator = cone.transform.denominator;

  auto project_rows = [&](const IntegerMatrix& rows, bool primitive) {
    std::vector<IntegerVector> out;
    for (std::size_t i = 0; i < rows.rows(); ++i) {
      IntegerVector p = split.project(rows.row(i));
      if (is_zero(p)) continue;
      out.push_back(primitive ? make_primitive(p) : p);
    }
    return out;
  };
  auto rays = project_rows(cone.extreme_rays, true);
  std::sort(rays.begin(), rays.end(), [](const auto& a, const auto& b) { return lex_less(a, b); });
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  q.extreme_rays = IntegerMatrix::from_rows(rays, k);

  std::vector<IntegerVector> forms;
  for (std::size_t i = 0; i < cone.support_forms.rows(); ++i)
    forms.push_back(make_primitive(split.section * cone.support_forms.row(i)));
  q.support_forms = IntegerMatrix::from_rows(forms, k);

  if (cone.generators_from_input) {
    q.generators = IntegerMatrix::from_rows(project_rows(cone.generators, false), k);
    q.generators_from_input = true;
  } else {
    q.generators = q.extreme_rays;
  }

  if (cone.grading) {
    for (std::size_t i = 0; i < cone.maximal_subspace.rows(); ++i)
      if (!dot(*cone.grading, cone.maximal_subspace.row(i)).is_zero())
        throw Error(ErrorCode::NotGraded, "grading does not vanish on the maximal subspace");
    q.grading = split.section * std::span<const Integer>(*cone.grading);
  }
  return q;
}

}  // namespace

ComputedCone pointed_quotient(const ComputedCone& cone) {
  if (cone.pointed()) throw Error(ErrorCode::AlreadyPointed, "cone is already pointed");
  return quotient_impl(cone);
}

ComputedCone identity_quotient(const ComputedCone& cone) {
  if (!cone.pointed()) throw Error(ErrorCode::NotPointed, "identity quotient needs a pointed cone");
  return quotient_impl(cone);
}

std::optional<IntegerVector> implicit_grading(const IntegerMatrix& rays) {
  if (rays.rows() == 0) return std::nullopt;
  IntegerVector ones(rays.rows(), Integer(1));
  std::vector<Rational> x;
  if (!solve_left_rational(rays.transpose(), ones, x)) return std::nullopt;
  Integer den = 1;
  for (const auto& v : x) den = lcm(den, v.denominator());
  IntegerVector g;
  for (const auto& v : x) g.push_back(v.numerator() * (den / v.denominator()));
  g = make_primitive(g);
  for (std::size_t i = 0; i < rays.rows(); ++i)
    if (dot(g, rays.row(i)).sign() <= 0) return std::nullopt;
  return g;
}

IntegerMatrix sort_by_degree(const IntegerMatrix& rows, const std::optional<IntegerVector>& grading) {
  std::vector<IntegerVector> v = rows.row_vectors();
  std::stable_sort(v.begin(), v.end(), [&](const IntegerVector& a, const IntegerVector& b) {
    if (grading) {
      Integer da = dot(*grading, a), db = dot(*grading, b);
      if (da != db) return da < db;
    }
    return lex_less(a, b);
  });
  return IntegerMatrix::from_rows(v, rows.cols());
}

}  // namespace latk
