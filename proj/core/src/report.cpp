#include <sstream>

#include "latk/pipeline.hpp"

namespace latk {

namespace {

void write_vector(std::ostringstream& os, std::span<const Integer> v) {
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  os << '\n';
}

void write_block(std::ostringstream& os, const std::string& header, const std::vector<IntegerVector>& rows) {
  os << rows.size() << ' ' << header << ":\n";
  for (const auto& r : rows) write_vector(os, r);
  os << '\n';
}

void write_series(std::ostringstream& os, const std::string& title, const HilbertSeries& hs, bool show_shift) {
  os << title << ":\n";
  write_vector(os, hs.numerator);
  os << "denominator with " << hs.denominator_factors() << " factors:\n";
  bool first = true;
  for (const auto& [g, m] : hs.denominator) {
    os << (first ? "" : "  ") << g << ": " << m;
    first = false;
  }
  os << '\n';
  if (show_shift || hs.shift != 0) os << "\nshift = " << hs.shift << '\n';
  os << '\n';
}

}  // namespace

std::string format_report(const Report& r) {
  std::ostringstream os;
  os << "embedding dimension = " << r.ambient_dim << '\n';
  if (r.inhomogeneous) os << "inhomogeneous system, homogenized by one coordinate\n";
  if (r.empty_outcome == ErrorCode::EmptyLattice) {
    os << "empty lattice: " << r.empty_message << "\n\n";
    os << "input system:\n" << r.input_echo;
    return os.str();
  }
  os << "rank = " << r.rank << '\n';
  os << (r.pointed ? "pointed" : "not pointed, computed modulo the maximal subspace") << '\n';
  if (r.graded) {
    if (r.grading_implicit) os << "implicit grading\n";
    else os << "grading denominator = " << r.grading_denominator << '\n';
  }
  if (r.empty_outcome == ErrorCode::EmptyModule) os << "empty polyhedron: " << r.empty_message << '\n';
  os << '\n';

  if (r.hilbert_basis) {
    if (r.graded) {
      std::vector<IntegerVector> low, high;
      for (std::size_t i = 0; i < r.hilbert_basis->size(); ++i)
        (r.hilbert_basis_degrees[i] == Integer(1) ? low : high).push_back((*r.hilbert_basis)[i]);
      write_block(os, "Hilbert basis elements of degree 1", low);
      write_block(os, "further Hilbert basis elements of higher degree", high);
    } else {
      write_block(os, "Hilbert basis elements", *r.hilbert_basis);
    }
  }
  write_block(os, "extreme rays", r.extreme_rays);
  if (!r.maximal_subspace.empty()) write_block(os, "basis elements of maximal subspace", r.maximal_subspace);
  if (r.module_generators) write_block(os, "module generators", *r.module_generators);
  if (r.recession_basis) write_block(os, "Hilbert basis elements of recession monoid", *r.recession_basis);
  if (r.module_rank) os << "module rank = " << *r.module_rank << "\n\n";
  if (r.series) write_series(os, "Hilbert series", *r.series, r.inhomogeneous);
  if (r.hsop) {
    os << "Heights vector:";
    for (long h : r.hsop->heights) os << ' ' << h;
    os << "\nDegrees of HSOP:";
    for (long g : r.hsop->degrees) os << ' ' << g;
    os << "\n\n";
    write_series(os, "Hilbert series (HSOP)", r.hsop->series, r.inhomogeneous);
  }
  if (r.quasipolynomial) {
    const Quasipolynomial& q = *r.quasipolynomial;
    os << "Hilbert quasipolynomial of period " << q.period << ", valid from degree " << q.valid_from << ":\n";
    for (const auto& row : q.coefficients) write_vector(os, row);
    os << "with common denominator = " << q.denominator << "\n\n";
  }
  if (r.class_group) os << "class group = " << r.class_group->str() << "\n\n";
  if (r.triangulation) {
    const TriangulationInfo& t = *r.triangulation;
    write_block(os, "triangulation generators", t.generators);
    os << t.simplices.size() << " simplicial cones, " << (t.bottom ? "bottom decomposition" : "placing order")
       << ", determinant sum " << t.detsum << ":\n";
    for (const auto& [idx, det] : t.simplices) {
      for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? " " : "") << idx[i];
      os << ": " << det << '\n';
    }
    os << '\n';
  }
  os << "input system:\n" << r.input_echo;
  return os.str();
}

}  // namespace latk
