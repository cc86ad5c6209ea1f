#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "plie/scalar.hpp"

namespace plie {

using Vec = std::vector<Scalar>;

Scalar dot(const Vec& a, const Vec& b);
void axpy(Vec& y, const Scalar& a, const Vec& x);  // y += a * x
bool is_zero(const Vec& v);
Vec zeros(std::size_t n);
Vec unit(std::size_t n, std::size_t k);
Vec scaled(const Vec& v, const Scalar& a);
Vec sub(const Vec& a, const Vec& b);

/// Dense row-major matrix over exact rationals.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Mat identity(std::size_t n);
  /// Stacks row vectors; `cols` disambiguates the empty case.
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;

  Mat transpose() const;
  Mat operator*(const Mat& o) const;

  friend bool operator==(const Mat& a, const Mat& b) = default;
  friend std::ostream& operator<<(std::ostream& os, const Mat& m);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

Vec mul(const Vec& x, const Mat& m);  // row vector times matrix

struct RrefResult {
  Mat mat;
  std::vector<std::size_t> pivots;  // pivot columns, ascending
};

/// Reduced row echelon form with the deterministic pivot rule: leftmost
/// column first, topmost nonzero row as pivot.
RrefResult rref(const Mat& m);

std::size_t rank(const Mat& m);

/// Basis of the left kernel {x : x * m = 0}, ordered by the free columns of
/// rref(transpose(m)).
std::vector<Vec> kernel_basis(const Mat& m);

/// Standard basis vectors for the non-pivot coordinates of the stacked
/// input, so input + output is a basis of the ambient space.
/// Throws if the input vectors are dependent.
std::vector<Vec> complement_basis(const std::vector<Vec>& subspace, std::size_t ambient_dim);

Mat inverse(const Mat& m);  // throws std::invalid_argument("singular") if not invertible

/// Solves x * b = h for an invertible square b.
Vec solve_left(const Mat& b, const Vec& h);

/// Incremental exact elimination over a growing set of row vectors; tracks
/// the expression of every added vector over the kept (independent) ones.
class EchelonTracker {
 public:
  explicit EchelonTracker(std::size_t width) : width_(width) {}

  /// Returns true when v extends the span (v is kept). If coords is non-null
  /// it receives the expression of v over the kept vectors so far, including
  /// v itself when kept.
  bool add(const Vec& v, Vec* coords = nullptr);

  bool contains(const Vec& v) const;
  std::size_t kept_count() const { return kept_; }
  std::size_t width() const { return width_; }

 private:
  struct Row {
    Vec r;         // reduced row, pivot entry 1
    Vec expr;      // r as a combination of the kept originals
    std::size_t pivot;
  };
  // Reduces v in place, accumulating the expression over kept originals.
  // Returns the pivot position, or width_ when v reduced to zero.
  std::size_t reduce(Vec& v, Vec& acc) const;

  std::vector<Row> rows_;  // sorted by pivot
  std::size_t width_;
  std::size_t kept_ = 0;
};

}  // namespace plie
