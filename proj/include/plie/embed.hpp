#pragma once

#include <cstddef>

#include "plie/matrix.hpp"
#include "plie/pentad.hpp"

namespace plie {

/// Weight data of a reductive algebra with a diagonalizable representation,
/// restricted to its center plus a Cartan subalgebra: the Gram matrix of the
/// invariant form on that slice and one weight column per generator.
struct ReductiveData {
  std::size_t dim_center = 0;
  std::size_t dim_cartan = 0;
  Mat gram;     // (dim_center + dim_cartan) square, symmetric invertible
  Mat columns;  // (dim_center + dim_cartan) x n weight columns

  friend bool operator==(const ReductiveData&, const ReductiveData&) = default;
};

/// The rank-1 family carrying sl2 with its (m+1)-dimensional irreducible
/// representation: P(1, 2; (1/8), (2  -m), diag(4, 4)).
CartanPentad sl2_pentad(std::size_t m);

/// Pentad realizing the given weight data: d is the column matrix, the
/// degree-0 twist is the inverse transpose of the Gram matrix, and gamma is
/// all ones (graded dimensions do not depend on it).
/// Throws std::invalid_argument on a singular or non-symmetric Gram matrix.
CartanPentad pentad_from_reductive(const ReductiveData& data);

}  // namespace plie
