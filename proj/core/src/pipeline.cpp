#include "latk/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <ostream>
#include <thread>

#include "latk/cone.hpp"
#include "latk/inhomogeneous.hpp"
#include "latk/simplicial.hpp"
#include "latk/triangulation.hpp"

namespace latk {

namespace {

struct SimplexResult {
  std::vector<IntegerVector> candidates;
  std::vector<IntegerVector> closed_points;
  SeriesAccumulator series;
};

template <class Body>
void parallel_for(std::size_t n, unsigned threads, Body&& body) {
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> first_error{n};
  auto work = [&](std::size_t start, std::size_t step) {
    for (std::size_t i = start; i < n; i += step) {
      if (i > first_error.load()) break;
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
        std::size_t cur = first_error.load();
        while (i < cur && !first_error.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  const std::size_t t = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
  if (t == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < t; ++w) pool.emplace_back(work, w, t);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

IntegerMatrix dedup_sorted(const IntegerMatrix& gens, const std::optional<IntegerVector>& grading) {
  IntegerMatrix sorted = sort_by_degree(gens, grading);
  std::vector<IntegerVector> rows = sorted.row_vectors();
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return IntegerMatrix::from_rows(rows, gens.cols());
}

class Runner {
 public:
  Runner(const InputSystem& input, const RunConfig& config) : input_(input), cfg_(config) {}

  Report run() {
    rep_.ambient_dim = input_.dim;
    rep_.inhomogeneous = input_.inhomogeneous();
    rep_.input_echo = format_input(input_);
    Homogenized h;
    try {
      h = homogenize(input_);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::EmptyLattice) throw;
      rep_.empty_outcome = ErrorCode::EmptyLattice;
      rep_.empty_message = e.what();
      return rep_;
    }
    level_ = h.level;
    ComputedCone cone = preprocess(h.system, !rep_.inhomogeneous);
    rep_.rank = cone.dim;
    rep_.pointed = cone.pointed();
    rep_.maximal_subspace = cone.ambient_units.row_vectors();
    log("preprocessing done: rank " + std::to_string(cone.dim) + ", " +
        std::to_string(cone.extreme_rays.rows()) + " extreme rays, " +
        std::to_string(cone.support_forms.rows()) + " support forms");

    if (!rep_.inhomogeneous && cfg_.module_generators && !cone.pointed())
      throw Error(ErrorCode::NotPositive, "module generators need a pointed cone");
    if (cfg_.route_through_quotient && cone.pointed()) cone = identity_quotient(cone);

    for (;;) {
      try {
        evaluate(cone);
        break;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotPointed || cone.pointed()) throw;
        log("cone is not pointed, passing to the quotient by its maximal subspace");
        cone = pointed_quotient(cone);
      }
    }
    return rep_;
  }

 private:
  void log(const std::string& line) const {
    if (cfg_.verbose && cfg_.log) *cfg_.log << line << '\n';
  }

  void evaluate(ComputedCone& cone) {
    if (!cone.pointed()) throw Error(ErrorCode::NotPointed, "cone has a nontrivial maximal subspace");
    const bool inhom = rep_.inhomogeneous;
    IntegerVector level_w;
    if (inhom) level_w = cone.transform.form_to_working(*level_);

    if (!inhom) {
      if (cone.grading) {
        for (std::size_t i = 0; i < cone.extreme_rays.rows(); ++i)
          if (cone.degree(cone.extreme_rays.row(i)).sign() <= 0)
            throw Error(ErrorCode::NonPositiveDegree, "grading is not positive on the extreme rays");
      } else if (cone.dim > 0) {
        if (auto g = implicit_grading(cone.extreme_rays)) {
          cone.grading = *g;
          cone.grading_implicit = true;
          log("implicit grading found");
        }
      }
    }
    rep_.graded = cone.grading.has_value();
    rep_.grading_implicit = cone.grading_implicit;
    rep_.grading_denominator = cone.grading_denominator;

    const bool default_goals = !cfg_.any_goal();
    const bool want_hb = cfg_.hilbert_basis || default_goals || (inhom && cfg_.module_generators);
    const bool want_series = cfg_.hilbert_series || cfg_.hsop || (default_goals && rep_.graded);
    const bool want_closed = cfg_.module_generators && !inhom;
    if (want_series && !rep_.graded) throw Error(ErrorCode::NotGraded, "the Hilbert series needs a grading");
    if (cfg_.hsop && inhom) throw Error(ErrorCode::InvalidInput, "HSOP denominators need homogeneous input");
    if (want_series && inhom) {
      for (std::size_t i = 0; i < cone.extreme_rays.rows(); ++i)
        if (dot(level_w, cone.extreme_rays.row(i)).is_zero() &&
            cone.degree(cone.extreme_rays.row(i)).sign() <= 0)
          throw Error(ErrorCode::NonPositiveDegree, "grading is not positive on the recession cone");
    }

    rep_.extreme_rays.clear();
    for (std::size_t i = 0; i < cone.extreme_rays.rows(); ++i)
      rep_.extreme_rays.push_back(make_primitive(cone.lift(cone.extreme_rays.row(i))));
    std::sort(rep_.extreme_rays.begin(), rep_.extreme_rays.end(),
              [](const auto& a, const auto& b) { return lex_less(a, b); });

    const std::optional<IntegerVector> order_grading = inhom ? std::nullopt : cone.grading;
    IntegerMatrix gens = cone.dim ? dedup_sorted(cone.generators, order_grading) : IntegerMatrix(0, 0);

    Triangulation tri;
    bool bottom = false;
    if (cone.dim > 0) {
      bottom = cfg_.bottom;
      if (!bottom && order_grading) {
        Rational rough = roughness(gens, *order_grading);
        log("roughness " + rough.str());
        bottom = rough >= Rational(kRoughnessThreshold);
      }
      tri = bottom ? bottom_triangulation(gens) : lex_triangulation(gens);
      log(std::string(bottom ? "bottom" : "lexicographic") + " triangulation: " +
          std::to_string(tri.simplices.size()) + " simplicial cones, determinant sum " + tri.detsum.str());
    }

    std::vector<SimplexResult> results(tri.simplices.size());
    parallel_for(tri.simplices.size(), cfg_.threads, [&](std::size_t i) {
      const SimplicialCone& s = tri.simplices[i];
      IntegerMatrix rays = simplex_rows(gens, s);
      SimplexResult& out = results[i];
      if (want_hb || want_series) {
        std::vector<IntegerVector> points = parallelotope_points(rays, s.excluded);
        if (want_hb) {
          out.candidates = local_candidates(points, rays);
          if (inhom)
            std::erase_if(out.candidates, [&](const IntegerVector& c) { return dot(level_w, c) > Integer(1); });
        }
        if (want_series) {
          if (inhom) {
            for (const auto& u : points) add_level_one_components(out.series, u, rays, level_w, *cone.grading);
          } else {
            std::vector<long> ray_degrees;
            for (std::size_t r = 0; r < rays.rows(); ++r)
              ray_degrees.push_back(cone.degree(rays.row(r)).to_int64());
            for (const auto& u : points) out.series.add(cone.degree(u).to_int64(), ray_degrees);
          }
        }
      }
      if (want_closed) out.closed_points = parallelotope_points(rays, {});
    });

    auto by_degree = [&](std::vector<IntegerVector> ys, bool graded) {
      std::vector<std::pair<Integer, IntegerVector>> lifted;
      for (const auto& y : ys) lifted.emplace_back(graded ? cone.degree(y) : Integer(0), cone.lift(y));
      std::sort(lifted.begin(), lifted.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return lex_less(a.second, b.second);
      });
      std::vector<IntegerVector> out;
      for (auto& [d, v] : lifted) out.push_back(std::move(v));
      return out;
    };

    if (want_hb) {
      std::vector<IntegerVector> candidates;
      for (auto& r : results)
        for (auto& c : r.candidates) candidates.push_back(std::move(c));
      const IntegerMatrix& forms = cone.support_forms;
      std::vector<IntegerVector> hb;
      if (order_grading) {
        hb = global_reduce(std::move(candidates), forms,
                           [&](std::span<const Integer> x) { return cone.degree(x); });
      } else {
        hb = global_reduce(std::move(candidates), forms,
                           [&](std::span<const Integer> x) { return support_degree(forms, x); });
      }
      log("global reduction: " + std::to_string(hb.size()) + " irreducible elements");
      if (!inhom) {
        rep_.hilbert_basis_degrees.clear();
        if (rep_.graded) {
          std::vector<Integer> degrees;
          for (const auto& y : hb) degrees.push_back(cone.degree(y));
          std::sort(degrees.begin(), degrees.end());
          rep_.hilbert_basis_degrees = degrees;
        }
        rep_.hilbert_basis = by_degree(hb, rep_.graded);
      } else {
        LevelSplit split = split_levels(hb, level_w);
        rep_.module_generators = by_degree(split.module_generators, rep_.graded);
        rep_.recession_basis = by_degree(split.recession_basis, rep_.graded);
        rep_.module_rank = module_rank_residues(*rep_.module_generators, *rep_.recession_basis, cone.ambient_units);
        rep_.module_rank_by_polytope = module_rank_polytope(cone, level_w);
        if (*rep_.module_rank != *rep_.module_rank_by_polytope)
          throw Error(ErrorCode::Internal, "module rank computations disagree");
      }
    }

    if (inhom && cone.dim == 0) {
      rep_.module_generators = std::vector<IntegerVector>{};
      rep_.recession_basis = std::vector<IntegerVector>{};
      rep_.module_rank = 0;
      rep_.module_rank_by_polytope = 0;
    }

    if (want_closed) {
      std::vector<IntegerVector> points;
      for (auto& r : results)
        for (auto& p : r.closed_points) points.push_back(std::move(p));
      rep_.module_generators = by_degree(minimal_module_generators(points, gens, cone.support_forms), rep_.graded);
    }

    if (want_series) {
      SeriesAccumulator acc;
      for (const auto& r : results) acc.merge(r.series);
      HilbertSeries raw;
      if (!inhom && cone.dim == 0) raw.numerator = {Integer(1)};
      else raw = acc.result();
      CyclotomicForm cf = reduce(raw);
      rep_.series = standard_denominator(cf);
      if (cf.orders.count(1) > 0) rep_.quasipolynomial = quasipolynomial(cf);
      if (cfg_.hsop) {
        IntegerMatrix rays = sort_by_degree(cone.extreme_rays, cone.grading);
        std::vector<long> degrees;
        for (std::size_t i = 0; i < rays.rows(); ++i) degrees.push_back(cone.degree(rays.row(i)).to_int64());
        HsopInfo info;
        info.heights = hsop_heights(rays, cone.support_forms);
        info.degrees = hsop_degrees(info.heights, degrees);
        info.series = renumerate(cf, info.degrees);
        std::string hv = "Heights vector:", dv = "Degrees of HSOP:";
        for (long x : info.heights) hv += " " + std::to_string(x);
        for (long x : info.degrees) dv += " " + std::to_string(x);
        log(hv);
        log(dv);
        rep_.hsop = std::move(info);
      }
    }

    if (cfg_.class_group) rep_.class_group = class_group(cone.support_forms);

    if (cfg_.triangulation) {
      TriangulationInfo info;
      info.bottom = bottom;
      info.detsum = tri.detsum;
      for (std::size_t i = 0; i < gens.rows(); ++i) info.generators.push_back(cone.lift(gens.row(i)));
      for (const auto& s : tri.simplices) {
        std::vector<std::size_t> idx;
        for (std::size_t g : s.generators) idx.push_back(g + 1);
        info.simplices.emplace_back(std::move(idx), s.determinant);
      }
      rep_.triangulation = std::move(info);
    }

    if (inhom && rep_.module_generators && rep_.module_generators->empty()) {
      rep_.empty_outcome = ErrorCode::EmptyModule;
      rep_.empty_message = "the polyhedron contains no lattice points";
    }
  }

  const InputSystem& input_;
  const RunConfig& cfg_;
  Report rep_;
  std::optional<IntegerVector> level_;
};

}  // namespace

Report run(const InputSystem& input, const RunConfig& config) { return Runner(input, config).run(); }

}  // namespace latk
