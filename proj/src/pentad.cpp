#include "plie/pentad.hpp"

#include <stdexcept>
#include <string>

namespace plie {

void validate(const CartanPentad& p) {
  if (p.r == 0) throw std::invalid_argument("r must be positive");
  if (p.a.rows() != p.r || p.a.cols() != p.r)
    throw std::invalid_argument("shape mismatch: A must be r x r");
  if (p.d.rows() != p.r || p.d.cols() != p.n)
    throw std::invalid_argument("shape mismatch: D must be r x n");
  if (p.gamma.size() != p.n)
    throw std::invalid_argument("shape mismatch: gamma must have n entries");
  if (rank(p.a) != p.r) throw std::invalid_argument("A singular");
  for (const Scalar& g : p.gamma)
    if (g.is_zero()) throw std::invalid_argument("gamma entry zero");
}

namespace {

// gamma * transpose(d) * a, the matrix whose rows are the h_i.
Mat gamma_dt_a(const CartanPentad& p) {
  Mat g = p.d.transpose() * p.a;  // n x r
  for (std::size_t i = 0; i < p.n; ++i)
    for (std::size_t j = 0; j < p.r; ++j) g(i, j) *= p.gamma[i];
  return g;
}

}  // namespace

Mat cartan_matrix(const CartanPentad& p) {
  validate(p);
  return gamma_dt_a(p) * p.d;
}

Mat h_vectors(const CartanPentad& p) {
  validate(p);
  return gamma_dt_a(p);
}

SpanAnalysis analyze_spans(const CartanPentad& p) {
  validate(p);
  SpanAnalysis out;
  out.h_rows = gamma_dt_a(p);
  const Mat c = out.h_rows * p.d;
  out.rank_d = rank(p.d);
  out.rank_c = rank(c);
  out.dim_bracket = out.rank_d;
  out.dim_ann = p.r - out.rank_d;
  out.dim_intersection = out.rank_d - out.rank_c;
  out.ann_basis = kernel_basis(p.d);
  // The intersection is spanned by the images c * h_rows over the left
  // kernel of the cartan matrix; keep the first independent images.
  EchelonTracker tracker(p.r);
  for (const Vec& coeff : kernel_basis(c)) {
    const Vec img = mul(coeff, out.h_rows);
    if (tracker.add(img)) out.intersection_basis.push_back(img);
  }
  return out;
}

StripResult strip_zero_columns(const CartanPentad& p) {
  validate(p);
  StripResult res;
  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < p.n; ++j) {
    if (is_zero(p.d.col(j)))
      res.removed.push_back(j);
    else
      kept.push_back(j);
  }
  CartanPentad q;
  q.r = p.r;
  q.n = kept.size();
  q.a = p.a;
  q.d = Mat(p.r, kept.size());
  for (std::size_t jj = 0; jj < kept.size(); ++jj) {
    for (std::size_t i = 0; i < p.r; ++i) q.d(i, jj) = p.d(i, kept[jj]);
    q.gamma.push_back(p.gamma[kept[jj]]);
  }
  res.pentad = std::move(q);
  return res;
}

}  // namespace plie
