#pragma once

#include <string>

#include "plie/graded.hpp"

namespace plie {

struct Report {
  std::string name;
  bool pass = false;
  std::string witness;  // first failure, or a short summary on pass
  double seconds = 0.0;

  friend bool operator==(const Report&, const Report&) = default;
};

/// Checks [[x,y],z] = [x,[y,z]] - [y,[x,z]] over all basis triples whose
/// intermediate degrees stay inside the horizon.
Report verify_jacobi(const GradedLieAlgebra& g);

/// Checks that for 2 <= |m| <= N no nonzero element brackets to zero with
/// the whole opposite generator space.
Report verify_transitivity(const GradedLieAlgebra& g);

/// Antisymmetry of every recorded table pair plus the grading rules: values
/// have the degree k+l length and respect weight additivity.
Report verify_structure_constants(const GradedLieAlgebra& g);

}  // namespace plie
