#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "latk/error.hpp"
#include "latk/input.hpp"
#include "latk/monoid.hpp"
#include "latk/series.hpp"

namespace latk {

struct RunConfig {
  bool hilbert_basis = false;
  bool hilbert_series = false;
  bool hsop = false;
  bool class_group = false;
  bool module_generators = false;
  bool triangulation = false;
  bool bottom = false;
  bool verbose = false;
  unsigned threads = 1;
  /// Sends a pointed cone through the quotient code path as well.
  bool route_through_quotient = false;
  /// Receives verbose progress lines; may be null.
  std::ostream* log = nullptr;

  bool any_goal() const {
    return hilbert_basis || hilbert_series || hsop || class_group || module_generators || triangulation;
  }
};

struct TriangulationInfo {
  bool bottom = false;
  Integer detsum;
  /// Generators in ambient coordinates, in triangulation order.
  std::vector<IntegerVector> generators;
  /// Per simplex: 1-based generator indices and determinant.
  std::vector<std::pair<std::vector<std::size_t>, Integer>> simplices;
};

struct HsopInfo {
  std::vector<long> heights;
  std::vector<long> degrees;
  HilbertSeries series;
};

struct Report {
  std::size_t ambient_dim = 0;
  std::size_t rank = 0;
  bool inhomogeneous = false;
  bool pointed = true;
  bool graded = false;
  bool grading_implicit = false;
  Integer grading_denominator{1};
  /// Canonical text of the input system.
  std::string input_echo;

  std::optional<ErrorCode> empty_outcome;
  std::string empty_message;

  std::optional<std::vector<IntegerVector>> hilbert_basis;
  /// Degrees of the Hilbert basis elements when graded.
  std::vector<Integer> hilbert_basis_degrees;
  std::vector<IntegerVector> extreme_rays;
  std::vector<IntegerVector> maximal_subspace;
  std::optional<std::vector<IntegerVector>> module_generators;
  std::optional<std::vector<IntegerVector>> recession_basis;
  std::optional<std::size_t> module_rank;
  std::optional<std::size_t> module_rank_by_polytope;
  std::optional<HilbertSeries> series;
  std::optional<HsopInfo> hsop;
  std::optional<Quasipolynomial> quasipolynomial;
  std::optional<ClassGroup> class_group;
  std::optional<TriangulationInfo> triangulation;
};

/// Runs the requested computations. Without any goal the Hilbert basis and,
/// when a grading is available, the Hilbert series are computed. Empty
/// lattices and empty polyhedra are recorded in the report, not thrown.
Report run(const InputSystem& input, const RunConfig& config);

std::string format_report(const Report& report);

}  // namespace latk
