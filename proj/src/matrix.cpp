#include "plie/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace plie {

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void axpy(Vec& y, const Scalar& a, const Vec& x) {
  if (y.size() != x.size()) throw std::invalid_argument("axpy: length mismatch");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec zeros(std::size_t n) { return Vec(n); }

Vec unit(std::size_t n, std::size_t k) {
  Vec v(n);
  v.at(k) = Scalar(1);
  return v;
}

Vec scaled(const Vec& v, const Scalar& a) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = a * v[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("from_rows: row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vec Mat::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

Vec Mat::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matmul: shape mismatch");
  Mat p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& aik = (*this)(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += aik * o(k, j);
    }
  return p;
}

Vec mul(const Vec& x, const Mat& m) {
  if (x.size() != m.rows()) throw std::invalid_argument("mul: shape mismatch");
  Vec r(m.cols());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] += x[i] * m(i, j);
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const Mat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m(i, j);
    }
    os << "]\n";
  }
  return os;
}

RrefResult rref(const Mat& m) {
  RrefResult res{m, {}};
  Mat& a = res.mat;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(row, j), a(piv, j));
    const Scalar inv = Scalar(1) / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      const Scalar f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    res.pivots.push_back(col);
    ++row;
  }
  return res;
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

std::vector<Vec> kernel_basis(const Mat& m) {
  const RrefResult r = rref(m.transpose());
  std::vector<bool> is_pivot(m.rows(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.rows(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.rows());
    v[f] = Scalar(1);
    for (std::size_t pr = 0; pr < r.pivots.size(); ++pr) v[r.pivots[pr]] = -r.mat(pr, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> complement_basis(const std::vector<Vec>& subspace, std::size_t ambient_dim) {
  const Mat stacked = Mat::from_rows(subspace, ambient_dim);
  const RrefResult r = rref(stacked);
  if (r.pivots.size() != subspace.size()) throw std::invalid_argument("not independent");
  std::vector<bool> is_pivot(ambient_dim, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> out;
  for (std::size_t k = 0; k < ambient_dim; ++k)
    if (!is_pivot[k]) out.push_back(unit(ambient_dim, k));
  return out;
}

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  const std::size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar(1);
  }
  const RrefResult r = rref(aug);
  if (r.pivots.size() != n || r.pivots[n - 1] != n - 1) throw std::invalid_argument("singular");
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.mat(i, n + j);
  return inv;
}

Vec solve_left(const Mat& b, const Vec& h) {
  return mul(h, inverse(b));
}

std::size_t EchelonTracker::reduce(Vec& v, Vec& acc) const {
  for (const Row& row : rows_) {
    const Scalar c = v[row.pivot];
    if (c.is_zero()) continue;
    for (std::size_t j = row.pivot; j < width_; ++j) v[j] -= c * row.r[j];
    for (std::size_t j = 0; j < row.expr.size(); ++j) acc[j] += c * row.expr[j];
  }
  for (std::size_t j = 0; j < width_; ++j)
    if (!v[j].is_zero()) return j;
  return width_;
}

bool EchelonTracker::add(const Vec& v, Vec* coords) {
  if (v.size() != width_) throw std::invalid_argument("tracker: width mismatch");
  Vec w = v;
  Vec acc = zeros(kept_ + 1);
  const std::size_t pivot = reduce(w, acc);
  if (pivot == width_) {
    if (coords) {
      acc.resize(kept_);
      *coords = std::move(acc);
    }
    return false;
  }
  // v joins the basis as original index kept_; the reduced residual is
  // v - sum(acc_i * orig_i), normalized to pivot 1.
  const std::size_t self = kept_;
  ++kept_;
  const Scalar inv = Scalar(1) / w[pivot];
  Row nr;
  nr.pivot = pivot;
  nr.r = scaled(w, inv);
  nr.expr = zeros(kept_);
  for (std::size_t j = 0; j < self; ++j) nr.expr[j] = -inv * acc[j];
  nr.expr[self] = inv;
  // Keep the stored rows fully reduced against the new pivot.
  for (Row& row : rows_) {
    const Scalar c = row.r[pivot];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < width_; ++j) row.r[j] -= c * nr.r[j];
    row.expr.resize(kept_);
    for (std::size_t j = 0; j < kept_; ++j) row.expr[j] -= c * nr.expr[j];
  }
  const auto pos = std::lower_bound(
      rows_.begin(), rows_.end(), pivot,
      [](const Row& r, std::size_t p) { return r.pivot < p; });
  rows_.insert(pos, std::move(nr));
  if (coords) *coords = unit(kept_, self);
  return true;
}

bool EchelonTracker::contains(const Vec& v) const {
  if (v.size() != width_) throw std::invalid_argument("tracker: width mismatch");
  Vec w = v;
  Vec acc = zeros(kept_);
  return reduce(w, acc) == width_;
}

}  // namespace plie
