#pragma once

#include <cstddef>
#include <vector>

#include "plie/matrix.hpp"
#include "plie/pentad.hpp"

namespace plie {

/// Degree -1/0/+1 slice of a graded Lie algebra with abelian degree 0 acting
/// diagonally. The degree-0 basis acts on positive generator j through
/// column j of `weights` and on negative generator j through its negative.
/// pairing[i][j] is the degree-0 value of [E_i, F_j].
struct LocalPart {
  std::size_t dim0 = 0;
  std::size_t npos = 0;                   // dim of each of the +1 and -1 slices
  Mat weights;                            // dim0 x npos
  std::vector<std::vector<Vec>> pairing;  // npos x npos entries in Q^dim0

  friend bool operator==(const LocalPart&, const LocalPart&) = default;
};

/// Checks shapes and the compatibility rule: pairing[i][j] may be nonzero
/// only when weight columns i and j agree (otherwise the degree-0 part
/// could not stay abelian).
void validate(const LocalPart& local);

/// Local slice generated by an n x n matrix c: n degree-0 elements H_i with
/// [H_i, E_j] = c_ij E_j and [E_i, F_j] = delta_ij H_i.
LocalPart local_from_cartan(const Mat& c);

/// Local slice of a pentad: weights d, pairing [e_i, f_i] = h_i.
LocalPart local_from_pentad(const CartanPentad& p);

}  // namespace plie
