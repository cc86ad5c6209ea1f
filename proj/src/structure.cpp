#include "plie/structure.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace plie {

namespace {

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << "]";
  return os.str();
}

Report fail(Report rep, const Timer& timer, std::string witness) {
  rep.pass = false;
  rep.witness = std::move(witness);
  rep.seconds = timer.seconds();
  return rep;
}

Report pass(Report rep, const Timer& timer, std::string witness) {
  rep.pass = true;
  rep.witness = std::move(witness);
  rep.seconds = timer.seconds();
  return rep;
}

}  // namespace

StructureReport decompose(const CartanPentad& p) {
  validate(p);
  StructureReport rep;
  const SpanAnalysis spans = analyze_spans(p);
  rep.cartan = spans.h_rows * p.d;
  rep.rank_d = spans.rank_d;
  rep.rank_c = spans.rank_c;
  rep.center_coeffs = kernel_basis(rep.cartan);
  rep.basis_central = spans.intersection_basis;
  // Reduced part: extend the central basis to a basis of span(h_i) by the
  // deterministic pivot rule, scanning the echelon rows of h.
  EchelonTracker tracker(p.r);
  for (const Vec& z : rep.basis_central) tracker.add(z);
  const RrefResult h_echelon = rref(spans.h_rows);
  std::vector<Vec> row_space;
  for (std::size_t i = 0; i < h_echelon.pivots.size(); ++i) row_space.push_back(h_echelon.mat.row(i));
  for (const Vec& row : row_space)
    if (tracker.add(row)) rep.basis_reduced.push_back(row);
  rep.basis_diagonal = complement_basis(row_space, p.r);
  rep.cartan_invertible = rep.rank_c == p.n;
  rep.is_reduced_contragredient = (p.r == rep.rank_d) && (rep.rank_d == rep.rank_c);
  return rep;
}

Report verify_decomposition(const CartanPentad& p, int max_degree) {
  const Timer timer;
  Report rep;
  rep.name = "decomposition";
  const StructureReport st = decompose(p);
  const GradedLieAlgebra alg = extend(local_from_pentad(p), max_degree);

  // (a) the central part brackets to zero with every basis element.
  for (const Vec& z : st.basis_central)
    for (int d = -max_degree; d <= max_degree; ++d)
      for (std::size_t j = 0; j < alg.dim(d); ++j)
        if (!is_zero(bracket(alg, 0, z, d, unit(alg.dim(d), j))))
          return fail(rep, timer,
                      "central vector " + vec_str(z) + " acts on degree " + std::to_string(d));

  // (b) the diagonal part acts diagonally on the constructed bases.
  for (const Vec& dv : st.basis_diagonal)
    for (int d = -max_degree; d <= max_degree; ++d) {
      if (d == 0) continue;
      for (std::size_t j = 0; j < alg.dim(d); ++j) {
        const Vec res = bracket(alg, 0, dv, d, unit(alg.dim(d), j));
        for (std::size_t q = 0; q < res.size(); ++q)
          if (q != j && !res[q].is_zero())
            return fail(rep, timer, "non-diagonal action of " + vec_str(dv) + " at degree " +
                                        std::to_string(d));
      }
    }

  // (c) opposite degrees bracket into reduced + central.
  EchelonTracker span_rz(p.r);
  for (const Vec& v : st.basis_reduced) span_rz.add(v);
  for (const Vec& v : st.basis_central) span_rz.add(v);
  for (int m = 1; m <= max_degree; ++m) {
    const BracketTable& t = alg.table(m, -m);
    for (std::size_t i = 0; i < alg.dim(m); ++i)
      for (std::size_t j = 0; j < alg.dim(-m); ++j)
        if (!span_rz.contains(t.c[i][j]))
          return fail(rep, timer,
                      "bracket of degrees (" + std::to_string(m) + ", " + std::to_string(-m) +
                          ") leaves reduced+central at (" + std::to_string(i) + ", " +
                          std::to_string(j) + ")");
  }

  // (d) graded dimensions agree with the reduced contragredient algebra.
  const GradedLieAlgebra red = reduced_contragredient(st.cartan, max_degree);
  if (red.dim(0) != st.rank_c)
    return fail(rep, timer, "reduced degree-0 dimension " + std::to_string(red.dim(0)) +
                                " != rank of cartan matrix " + std::to_string(st.rank_c));
  for (int d = -max_degree; d <= max_degree; ++d) {
    if (d == 0) continue;
    if (alg.dim(d) != red.dim(d))
      return fail(rep, timer, "dimension mismatch at degree " + std::to_string(d) + ": " +
                                  std::to_string(alg.dim(d)) + " vs reduced " +
                                  std::to_string(red.dim(d)));
  }

  // (e) generator relations for the projections of the h_i onto the reduced
  // part: [h'_i, e_j] = C_ij e_j.
  std::vector<Vec> assembled = st.basis_reduced;
  assembled.insert(assembled.end(), st.basis_central.begin(), st.basis_central.end());
  assembled.insert(assembled.end(), st.basis_diagonal.begin(), st.basis_diagonal.end());
  const Mat basis = Mat::from_rows(assembled, p.r);
  const Mat h = h_vectors(p);
  for (std::size_t i = 0; i < p.n; ++i) {
    const Vec coords = solve_left(basis, h.row(i));
    Vec hprime = zeros(p.r);
    for (std::size_t k = 0; k < st.basis_reduced.size(); ++k)
      axpy(hprime, coords[k], st.basis_reduced[k]);
    for (std::size_t j = 0; j < p.n; ++j) {
      Vec expected = zeros(p.n);
      expected[j] = st.cartan(i, j);
      if (bracket(alg, 0, hprime, 1, unit(p.n, j)) != expected)
        return fail(rep, timer, "projected generator relation fails at (" + std::to_string(i) +
                                    ", " + std::to_string(j) + ")");
    }
  }
  return pass(rep, timer,
              "reduced " + std::to_string(st.basis_reduced.size()) + ", central " +
                  std::to_string(st.basis_central.size()) + ", diagonal " +
                  std::to_string(st.basis_diagonal.size()));
}

Report verify_central_generators(const CartanPentad& p, int max_degree) {
  const Timer timer;
  Report rep;
  rep.name = "central-generators";
  validate(p);
  const GradedLieAlgebra alg = extend(local_from_pentad(p), max_degree);
  std::size_t zero_cols = 0;
  for (std::size_t i = 0; i < p.n; ++i) {
    if (!is_zero(p.d.col(i))) continue;
    ++zero_cols;
    for (int d = -(max_degree - 1); d <= max_degree - 1; ++d)
      for (std::size_t j = 0; j < alg.dim(d); ++j)
        for (int sign : {1, -1})
          if (!is_zero(bracket(alg, sign, unit(p.n, i), d, unit(alg.dim(d), j))))
            return fail(rep, timer, "generator " + std::to_string(i) + " (sign " +
                                        std::to_string(sign) + ") acts on degree " +
                                        std::to_string(d));
  }
  return pass(rep, timer,
              zero_cols == 0 ? "no zero columns, vacuous"
                             : std::to_string(2 * zero_cols) + " generators central");
}

Report verify_strip_dims(const CartanPentad& p, int max_degree) {
  const Timer timer;
  Report rep;
  rep.name = "strip-bookkeeping";
  const StripResult stripped = strip_zero_columns(p);
  const GradedLieAlgebra full = extend(local_from_pentad(p), max_degree);
  const GradedLieAlgebra small = extend(local_from_pentad(stripped.pentad), max_degree);
  const std::size_t dropped = stripped.removed.size();
  for (int d = -max_degree; d <= max_degree; ++d) {
    const std::size_t expected = small.dim(d) + (std::abs(d) == 1 ? dropped : 0);
    if (full.dim(d) != expected)
      return fail(rep, timer, "degree " + std::to_string(d) + ": " + std::to_string(full.dim(d)) +
                                  " != " + std::to_string(expected));
  }
  return pass(rep, timer, std::to_string(dropped) + " columns stripped, dimensions consistent");
}

Report gamma_invariance(const CartanPentad& p, const std::vector<Scalar>& gamma2,
                        int max_degree) {
  const Timer timer;
  Report rep;
  rep.name = "gamma-invariance";
  validate(p);
  if (gamma2.size() != p.n)
    throw std::invalid_argument("shape mismatch: gamma must have n entries");
  for (const Scalar& g : gamma2)
    if (g.is_zero()) throw std::invalid_argument("gamma entry zero");
  CartanPentad q = p;
  q.gamma = gamma2;
  const GradedLieAlgebra a1 = extend(local_from_pentad(p), max_degree);
  const GradedLieAlgebra a2 = extend(local_from_pentad(q), max_degree);
  for (int d = -max_degree; d <= max_degree; ++d)
    if (a1.dim(d) != a2.dim(d))
      return fail(rep, timer, "degree " + std::to_string(d) + ": " + std::to_string(a1.dim(d)) +
                                  " vs " + std::to_string(a2.dim(d)));
  return pass(rep, timer, "graded dimensions agree");
}

}  // namespace plie
