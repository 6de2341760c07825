#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "latk/matrix.hpp"

namespace latk {

/// One parsed input file. Homogeneous sections have rows of length dim;
/// congruences carry the modulus as an extra last entry. The inhom_* sections
/// describe a.x + a0 >= 0, a.x + a0 = 0 and a.x + a0 = 0 (mod m) with rows
/// (a, a0) and (a, a0, m). Vertices are rows (v, denominator).
struct InputSystem {
  std::size_t dim = 0;
  IntegerMatrix cone;
  IntegerMatrix inequalities;
  IntegerMatrix equations;
  IntegerMatrix congruences;
  IntegerMatrix inhom_inequalities;
  IntegerMatrix inhom_equations;
  IntegerMatrix inhom_congruences;
  IntegerMatrix vertices;
  std::optional<IntegerVector> grading;
  std::optional<IntegerVector> dehomogenization;

  /// True when the described set is a polyhedron rather than a cone.
  bool inhomogeneous() const;

  friend bool operator==(const InputSystem&, const InputSystem&) = default;
};

/// Throws ParseError with the position of the offending token.
InputSystem parse_input(std::string_view text);

/// Text that parse_input maps back to the same system.
std::string format_input(const InputSystem& system);

}  // namespace latk
