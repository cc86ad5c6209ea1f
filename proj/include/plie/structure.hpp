#pragma once

#include <vector>

#include "plie/checks.hpp"
#include "plie/graded.hpp"
#include "plie/pentad.hpp"

namespace plie {

/// Decomposition of the degree-0 slice of a pentad algebra into a reduced
/// part (the degree-0 slice of the reduced contragredient quotient), a
/// central part, and a complementary diagonally-acting part.
struct StructureReport {
  Mat cartan;
  std::size_t rank_d = 0;
  std::size_t rank_c = 0;
  std::vector<Vec> basis_reduced;   // complement of the central part inside span(h_i)
  std::vector<Vec> basis_central;   // span(h_i) meet the annihilator of the weights
  std::vector<Vec> basis_diagonal;  // complement of span(h_i) in Q^r
  std::vector<Vec> center_coeffs;   // left kernel of the cartan matrix
  bool cartan_invertible = false;
  bool is_reduced_contragredient = false;  // r = rank d = rank c

  friend bool operator==(const StructureReport&, const StructureReport&) = default;
};

StructureReport decompose(const CartanPentad& p);

/// Builds the pentad algebra up to max_degree and checks the decomposition:
/// the central part brackets to zero everywhere, the diagonal part acts
/// diagonally, opposite degrees bracket into reduced + central, graded
/// dimensions match the reduced contragredient of the cartan matrix, and the
/// projected h_i satisfy the generator relations.
Report verify_decomposition(const CartanPentad& p, int max_degree);

/// For every zero column of d, checks the matching degree +1/-1 generators
/// are central up to the horizon.
Report verify_central_generators(const CartanPentad& p, int max_degree);

/// Dimension bookkeeping against the zero-column-stripped pentad: equal in
/// every degree except +1/-1, which each carry the dropped columns.
Report verify_strip_dims(const CartanPentad& p, int max_degree);

/// Graded dimensions are unchanged when gamma is replaced by gamma2.
Report gamma_invariance(const CartanPentad& p, const std::vector<Scalar>& gamma2,
                        int max_degree);

}  // namespace plie
