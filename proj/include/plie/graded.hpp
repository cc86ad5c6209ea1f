#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "plie/local.hpp"
#include "plie/matrix.hpp"

namespace plie {

/// One basis element of a degree |m| >= 2 component. Elements are realized
/// as linear maps from the opposite-sign generator space into the component
/// one step closer to zero: row j of `map` is the bracket with generator j.
struct GradedBasisInfo {
  Mat map;                  // npos x dim(one step lower, same sign)
  std::size_t gen = 0;      // the element is [generator gen, parent]
  std::size_t parent = 0;
  Vec weight;               // eigenvalues of the degree-0 action, in Q^dim0
};

/// Structure constants of one pair of degrees (k, l): c[i][j] is the bracket
/// of basis elements i and j in coordinates over the degree k+l basis
/// (degree-0 coordinates when k+l = 0).
struct BracketTable {
  std::vector<std::vector<Vec>> c;
};

/// Truncated graded Lie algebra generated by a local part: bases for every
/// degree up to the horizon plus structure-constant tables for every bracket
/// that stays inside it. Built by extend(); plain data afterwards.
struct GradedLieAlgebra {
  LocalPart local;
  int max_degree = 1;
  std::vector<std::vector<GradedBasisInfo>> pos;  // index m-2 holds degree +m
  std::vector<std::vector<GradedBasisInfo>> neg;  // index m-2 holds degree -m
  std::map<std::pair<int, int>, BracketTable> tables;  // keys: k, l nonzero, |k+l| <= N

  std::size_t dim(int degree) const;
  /// Weight vector of basis element i of the given degree (zero for degree 0).
  Vec weight_of(int degree, std::size_t i) const;
  const BracketTable& table(int k, int l) const;
  bool in_horizon(int degree) const;
};

/// Builds the minimal truncated graded algebra over the local part: each new
/// component is the span, inside Hom(G_{-sign}, G_m), of the maps induced by
/// bracketing a generator against the previous component. Degrees beyond
/// max_degree are not computed.
GradedLieAlgebra extend(const LocalPart& local, int max_degree);

/// Bracket of coordinate vectors x (degree k) and y (degree l).
/// Throws std::out_of_range when any of |k|, |l|, |k+l| exceeds the horizon.
Vec bracket(const GradedLieAlgebra& g, int k, const Vec& x, int l, const Vec& y);

/// Coefficient vectors c with c * cartan = 0: the central degree-0 elements
/// sum c_i H_i of the algebra generated from `cartan`.
std::vector<Vec> center_degree0(const Mat& cartan);

/// The algebra of `cartan` with its degree-0 center factored out: degree 0
/// shrinks to rank(cartan), every other degree is unchanged.
GradedLieAlgebra reduced_contragredient(const Mat& cartan, int max_degree);

/// Dimensions by degree -N..N (index degree + N).
std::vector<std::size_t> graded_dims(const GradedLieAlgebra& g);

}  // namespace plie
