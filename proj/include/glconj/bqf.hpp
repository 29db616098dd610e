#pragma once

#include <optional>
#include <string>
#include <utility>

#include "glconj/int_matrix.hpp"

namespace glconj {

/// f(x, y) = a x^2 + b x y + c y^2.
struct BinaryQuadraticForm {
  Integer a, b, c;

  Integer discriminant() const { return b * b - 4 * a * c; }
  Integer operator()(const Integer& x, const Integer& y) const {
    return a * x * x + b * x * y + c * y * y;
  }
  /// f(M (x, y)^T) for a 2x2 integer matrix M.
  BinaryQuadraticForm transform(const IntMatrix& m) const;
  bool operator==(const BinaryQuadraticForm&) const = default;
  std::string to_string() const;
};

enum class UnitProof { Witness, DefiniteMinimum, CycleExclusion, FactorSystem };

std::string to_string(UnitProof p);

struct UnitRepresentation {
  bool represents = false;
  std::optional<std::pair<Integer, Integer>> witness;  // f(x, y) = +-1
  UnitProof proof = UnitProof::Witness;
  /// Proof data: the reduced form (definite), one form of the reduced cycle
  /// and the cycle length (indefinite), or the linear factors (square
  /// discriminant, stored as a = alpha, b = beta, c unused / second factor).
  BinaryQuadraticForm reduced;
  std::size_t cycle_length = 0;
  std::optional<std::pair<std::pair<Integer, Integer>, std::pair<Integer, Integer>>> factors;
};

/// Decides whether f takes the value +1 or -1. f must not be identically zero.
UnitRepresentation bqf_represents_unit(const BinaryQuadraticForm& f);

}  // namespace glconj
