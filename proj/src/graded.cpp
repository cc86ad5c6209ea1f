#include "plie/graded.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace plie {

namespace {

// Flattens an npos x d map matrix row-major for independence scans.
Vec flatten(const Mat& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

}  // namespace

std::size_t GradedLieAlgebra::dim(int degree) const {
  if (!in_horizon(degree)) throw std::out_of_range("degree out of range");
  if (degree == 0) return local.dim0;
  const int m = std::abs(degree);
  if (m == 1) return local.npos;
  const auto& side = degree > 0 ? pos : neg;
  return side[static_cast<std::size_t>(m - 2)].size();
}

Vec GradedLieAlgebra::weight_of(int degree, std::size_t i) const {
  if (!in_horizon(degree)) throw std::out_of_range("degree out of range");
  if (degree == 0) return zeros(local.dim0);
  const int m = std::abs(degree);
  if (m == 1) {
    Vec w = local.weights.col(i);
    if (degree < 0)
      for (Scalar& s : w) s = -s;
    return w;
  }
  const auto& side = degree > 0 ? pos : neg;
  return side[static_cast<std::size_t>(m - 2)].at(i).weight;
}

const BracketTable& GradedLieAlgebra::table(int k, int l) const {
  const auto it = tables.find({k, l});
  if (it == tables.end())
    throw std::out_of_range("no bracket table for degrees (" + std::to_string(k) + ", " +
                            std::to_string(l) + ")");
  return it->second;
}

bool GradedLieAlgebra::in_horizon(int degree) const {
  return std::abs(degree) <= max_degree;
}

namespace {

// [E_a, w] for w in degree-`deg` coordinates; the result lands in degree
// deg+1. For deg = 0, w is a degree-0 vector h and [h, E_a] is
// (h . weight column a) E_a; any other degree goes through the (1, deg) table.
Vec act_gen_pos(const GradedLieAlgebra& g, std::size_t a, int deg, const Vec& w) {
  if (deg == 0) {
    Vec res = zeros(g.local.npos);
    res[a] = -dot(w, g.local.weights.col(a));
    return res;
  }
  const BracketTable& t = g.table(1, deg);
  Vec res = zeros(g.dim(deg + 1));
  for (std::size_t s = 0; s < w.size(); ++s) axpy(res, w[s], t.c[a][s]);
  return res;
}

// [F_a, w] for w in degree-`deg` coordinates (deg <= 0); result in deg-1.
Vec act_gen_neg(const GradedLieAlgebra& g, std::size_t a, int deg, const Vec& w) {
  if (deg == 0) {
    Vec res = zeros(g.local.npos);
    res[a] = dot(w, g.local.weights.col(a));
    return res;
  }
  const BracketTable& t = g.table(-1, deg);
  Vec res = zeros(g.dim(deg - 1));
  for (std::size_t s = 0; s < w.size(); ++s) axpy(res, w[s], t.c[a][s]);
  return res;
}

// Bracket of basis element t of degree sign*m against generator j of the
// opposite sign: the recorded pairing in the local part, or a row of the
// realization map.
Vec drop(const GradedLieAlgebra& g, int sign, int m, std::size_t t, std::size_t j) {
  if (m == 1) {
    if (sign > 0) return g.local.pairing[t][j];        // [E_t, F_j]
    Vec v = g.local.pairing[j][t];                     // [F_t, E_j] = -[E_j, F_t]
    for (Scalar& s : v) s = -s;
    return v;
  }
  const auto& side = sign > 0 ? g.pos : g.neg;
  return side[static_cast<std::size_t>(m - 2)][t].map.row(j);
}

// Builds the degree sign*(m+1) component together with the bracket table
// (sign*1, sign*m). Candidates are scanned generator-major, previous-basis
// minor; the first independent realizations become the basis.
void build_step(GradedLieAlgebra& g, int m, int sign) {
  const LocalPart& L = g.local;
  const std::size_t n = L.npos;
  const std::size_t dm = g.dim(sign * m);
  EchelonTracker tracker(n * dm);
  std::vector<GradedBasisInfo> comp;
  BracketTable raise;
  raise.c.assign(n, std::vector<Vec>(dm));
  for (std::size_t a = 0; a < n; ++a) {
    const Vec wa = g.weight_of(sign, a);
    for (std::size_t t = 0; t < dm; ++t) {
      const Vec wt = g.weight_of(sign * m, t);
      Mat cand(n, dm);
      for (std::size_t j = 0; j < n; ++j) {
        // [[x_a, y_j], b_t]: the generator pairing acts on b_t by its weight.
        const Vec& pij = sign > 0 ? L.pairing[a][j] : L.pairing[j][a];
        Scalar s = dot(pij, wt);
        if (sign < 0) s = -s;
        if (!s.is_zero()) cand(j, t) += s;
        // [x_a, [b_t, y_j]]
        const Vec v = drop(g, sign, m, t, j);
        const Vec u = sign > 0 ? act_gen_pos(g, a, m - 1, v) : act_gen_neg(g, a, -(m - 1), v);
        for (std::size_t q = 0; q < dm; ++q) cand(j, q) += u[q];
      }
      Vec coords;
      if (tracker.add(flatten(cand), &coords)) {
        GradedBasisInfo info;
        info.map = cand;
        info.gen = a;
        info.parent = t;
        info.weight = wa;
        for (std::size_t q = 0; q < L.dim0; ++q) info.weight[q] += wt[q];
        comp.push_back(std::move(info));
      }
      raise.c[a][t] = std::move(coords);
    }
  }
  for (auto& row : raise.c)
    for (Vec& v : row) v.resize(tracker.kept_count());
  auto& side = sign > 0 ? g.pos : g.neg;
  side.push_back(std::move(comp));
  g.tables[{sign, sign * m}] = std::move(raise);
}

// Structure constants [b_i, y_j] for basis elements of degrees k (|k| >= 2)
// and l, by unfolding b_i = [generator, parent]:
//   [[x, v], y] = [x, [v, y]] - [v, [x, y]].
// Every sub-bracket involves a first argument of strictly smaller |degree|,
// so tables are filled in order of |k|.
BracketTable decompose_table(const GradedLieAlgebra& g, int k, int l) {
  const int sign = k > 0 ? 1 : -1;
  const int kv = k - sign;  // degree of the parent v
  const auto& side = sign > 0 ? g.pos : g.neg;
  const auto& comp = side[static_cast<std::size_t>(std::abs(k) - 2)];
  const std::size_t dl = g.dim(l);
  const BracketTable& gen_l = g.table(sign, l);  // [x_a, y_j]
  BracketTable tab;
  tab.c.assign(comp.size(), std::vector<Vec>(dl));
  for (std::size_t i = 0; i < comp.size(); ++i) {
    const std::size_t a = comp[i].gen;
    const std::size_t t = comp[i].parent;
    const Vec wv = g.weight_of(kv, t);
    const BracketTable& par_l = g.table(kv, l);  // [v_t, y_j]
    for (std::size_t j = 0; j < dl; ++j) {
      // [x_a, [v_t, y_j]]
      const Vec& w1 = par_l.c[t][j];
      Vec r = sign > 0 ? act_gen_pos(g, a, kv + l, w1) : act_gen_neg(g, a, kv + l, w1);
      // [v_t, [x_a, y_j]]
      const Vec& w2 = gen_l.c[a][j];
      if (l + sign == 0) {
        // w2 is a degree-0 vector: [v_t, w2] = -(w2 . weight(v_t)) v_t.
        const Scalar s = dot(w2, wv);
        if (!s.is_zero()) r[t] += s;  // r -= (-s) at index t
      } else {
        const BracketTable& par_gl = g.table(kv, l + sign);
        for (std::size_t s2 = 0; s2 < w2.size(); ++s2) {
          if (w2[s2].is_zero()) continue;
          const Vec& contrib = par_gl.c[t][s2];
          for (std::size_t q = 0; q < r.size(); ++q) r[q] -= w2[s2] * contrib[q];
        }
      }
      tab.c[i][j] = std::move(r);
    }
  }
  return tab;
}

void build_tables(GradedLieAlgebra& g) {
  const int n_deg = g.max_degree;
  const auto valid_pair = [&](int k, int l) {
    return k != 0 && l != 0 && std::abs(k) <= n_deg && std::abs(l) <= n_deg &&
           std::abs(k + l) <= n_deg;
  };
  // Brackets with a generator on the left: pairing, evaluation, or already
  // recorded while the components were built.
  for (int l = -n_deg; l <= n_deg; ++l) {
    if (valid_pair(1, l) && !g.tables.count({1, l})) {
      BracketTable t;
      t.c.assign(g.local.npos, std::vector<Vec>(g.dim(l)));
      for (std::size_t i = 0; i < g.local.npos; ++i)
        for (std::size_t j = 0; j < g.dim(l); ++j) {
          if (l == -1) {
            t.c[i][j] = g.local.pairing[i][j];
          } else {
            // l <= -2: [E_i, y_j] = -(realization of y_j applied to E_i)
            Vec v = g.neg[static_cast<std::size_t>(-l - 2)][j].map.row(i);
            for (Scalar& s : v) s = -s;
            t.c[i][j] = std::move(v);
          }
        }
      g.tables[{1, l}] = std::move(t);
    }
    if (valid_pair(-1, l) && !g.tables.count({-1, l})) {
      BracketTable t;
      t.c.assign(g.local.npos, std::vector<Vec>(g.dim(l)));
      for (std::size_t i = 0; i < g.local.npos; ++i)
        for (std::size_t j = 0; j < g.dim(l); ++j) {
          if (l == 1) {
            Vec v = g.local.pairing[j][i];
            for (Scalar& s : v) s = -s;
            t.c[i][j] = std::move(v);
          } else {
            // l >= 2: [F_i, y_j] = -(realization of y_j applied to F_i)
            Vec v = g.pos[static_cast<std::size_t>(l - 2)][j].map.row(i);
            for (Scalar& s : v) s = -s;
            t.c[i][j] = std::move(v);
          }
        }
      g.tables[{-1, l}] = std::move(t);
    }
  }
  for (int kk = 2; kk <= n_deg; ++kk)
    for (int k : {kk, -kk})
      for (int l = -n_deg; l <= n_deg; ++l)
        if (valid_pair(k, l) && !g.tables.count({k, l}))
          g.tables[{k, l}] = decompose_table(g, k, l);
}

}  // namespace

GradedLieAlgebra extend(const LocalPart& local, int max_degree) {
  if (max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
  validate(local);
  GradedLieAlgebra g;
  g.local = local;
  g.max_degree = max_degree;
  for (int m = 1; m + 1 <= max_degree; ++m) {
    build_step(g, m, +1);
    build_step(g, m, -1);
  }
  build_tables(g);
  return g;
}

Vec bracket(const GradedLieAlgebra& g, int k, const Vec& x, int l, const Vec& y) {
  if (!g.in_horizon(k) || !g.in_horizon(l) || !g.in_horizon(k + l))
    throw std::out_of_range("degree out of range");
  if (x.size() != g.dim(k) || y.size() != g.dim(l))
    throw std::invalid_argument("bracket: coordinate length mismatch");
  if (k == 0 && l == 0) return zeros(g.local.dim0);
  if (k == 0) {
    Vec res = zeros(y.size());
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!y[j].is_zero()) res[j] = dot(x, g.weight_of(l, j)) * y[j];
    return res;
  }
  if (l == 0) {
    Vec res = zeros(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!x[i].is_zero()) res[i] = -dot(y, g.weight_of(k, i)) * x[i];
    return res;
  }
  const BracketTable& t = g.table(k, l);
  Vec res = zeros(g.dim(k + l));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j].is_zero()) continue;
      axpy(res, x[i] * y[j], t.c[i][j]);
    }
  }
  return res;
}

std::vector<Vec> center_degree0(const Mat& cartan) {
  if (cartan.rows() != cartan.cols()) throw std::invalid_argument("cartan matrix must be square");
  return kernel_basis(cartan);
}

GradedLieAlgebra reduced_contragredient(const Mat& cartan, int max_degree) {
  if (cartan.rows() != cartan.cols()) throw std::invalid_argument("cartan matrix must be square");
  const std::size_t n = cartan.rows();
  const std::vector<Vec> center = center_degree0(cartan);
  const std::vector<Vec> compl_rows = complement_basis(center, n);
  // Quotient local part: degree 0 is the chosen complement of the center,
  // generators keep their identity, pairings are projected along the center.
  LocalPart q;
  q.dim0 = compl_rows.size();
  q.npos = n;
  q.weights = Mat(q.dim0, n);
  for (std::size_t k = 0; k < q.dim0; ++k) {
    const Vec w = mul(compl_rows[k], cartan);
    for (std::size_t j = 0; j < n; ++j) q.weights(k, j) = w[j];
  }
  std::vector<Vec> all_rows = compl_rows;
  all_rows.insert(all_rows.end(), center.begin(), center.end());
  const Mat basis = Mat::from_rows(all_rows, n);
  q.pairing.assign(n, std::vector<Vec>(n, zeros(q.dim0)));
  for (std::size_t i = 0; i < n; ++i) {
    const Vec coords = solve_left(basis, unit(n, i));
    Vec proj(q.dim0);
    for (std::size_t k = 0; k < q.dim0; ++k) proj[k] = coords[k];
    q.pairing[i][i] = std::move(proj);
  }
  return extend(q, max_degree);
}

std::vector<std::size_t> graded_dims(const GradedLieAlgebra& g) {
  std::vector<std::size_t> dims(2 * static_cast<std::size_t>(g.max_degree) + 1);
  for (int d = -g.max_degree; d <= g.max_degree; ++d)
    dims[static_cast<std::size_t>(d + g.max_degree)] = g.dim(d);
  return dims;
}

}  // namespace plie
