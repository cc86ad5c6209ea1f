#pragma once

#include <cstddef>
#include <vector>

#include "plie/matrix.hpp"

namespace plie {

/// Defining data of a graded local structure on gl_1^r: an invertible r x r
/// twist `a` for the degree-0 form, an r x n weight matrix `d`, and the
/// nonzero diagonal `gamma` twisting the degree +1/-1 pairing.
struct CartanPentad {
  std::size_t r = 0;
  std::size_t n = 0;
  Mat a;                      // r x r, invertible
  Mat d;                      // r x n
  std::vector<Scalar> gamma;  // n entries, all nonzero

  friend bool operator==(const CartanPentad&, const CartanPentad&) = default;
};

/// Throws std::invalid_argument ("A singular", "gamma entry zero", or a
/// shape mismatch message) when the pentad data is malformed. n = 0 is
/// allowed and yields an abelian algebra downstream.
void validate(const CartanPentad& p);

/// The n x n matrix gamma * transpose(d) * a * d.
Mat cartan_matrix(const CartanPentad& p);

/// Row i is h_i, the degree-0 value of the bracket of generator pair i:
/// the i-th row of gamma * transpose(d) * a. Shape n x r.
Mat h_vectors(const CartanPentad& p);

/// Ranks and subspaces of the degree-0 slice determined by the pentad:
/// the span of the h_i, the annihilator of the weight module, and their
/// intersection.
struct SpanAnalysis {
  std::size_t rank_d = 0;
  std::size_t rank_c = 0;
  std::size_t dim_bracket = 0;       // dim span(h_i)          = rank d
  std::size_t dim_ann = 0;           // dim {c : c d = 0}      = r - rank d
  std::size_t dim_intersection = 0;  // dim of their overlap   = rank d - rank c
  Mat h_rows;                        // n x r
  std::vector<Vec> ann_basis;
  std::vector<Vec> intersection_basis;

  friend bool operator==(const SpanAnalysis&, const SpanAnalysis&) = default;
};

SpanAnalysis analyze_spans(const CartanPentad& p);

struct StripResult {
  CartanPentad pentad;
  std::vector<std::size_t> removed;  // indices of dropped columns, ascending
};

/// Drops the zero columns of d together with the matching gamma entries;
/// remaining column order is preserved.
StripResult strip_zero_columns(const CartanPentad& p);

}  // namespace plie
