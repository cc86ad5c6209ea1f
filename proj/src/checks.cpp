#include "plie/checks.hpp"

#include <chrono>
#include <cstdlib>
#include <sstream>

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

Vec basis_bracket(const GradedLieAlgebra& g, int k, std::size_t i, int l, std::size_t j) {
  return bracket(g, k, unit(g.dim(k), i), l, unit(g.dim(l), j));
}

std::string triple_str(int k, std::size_t i, int l, std::size_t j, int s, std::size_t t) {
  std::ostringstream os;
  os << "(" << k << "#" << i << ", " << l << "#" << j << ", " << s << "#" << t << ")";
  return os.str();
}

}  // namespace

Report verify_jacobi(const GradedLieAlgebra& g) {
  const Timer timer;
  Report rep;
  rep.name = "jacobi";
  const int n_deg = g.max_degree;
  long checked = 0;
  for (int k = -n_deg; k <= n_deg; ++k)
    for (int l = -n_deg; l <= n_deg; ++l)
      for (int s = -n_deg; s <= n_deg; ++s) {
        if (std::abs(k + l) > n_deg || std::abs(l + s) > n_deg || std::abs(k + s) > n_deg ||
            std::abs(k + l + s) > n_deg)
          continue;
        for (std::size_t i = 0; i < g.dim(k); ++i)
          for (std::size_t j = 0; j < g.dim(l); ++j)
            for (std::size_t t = 0; t < g.dim(s); ++t) {
              const Vec lhs = bracket(g, k + l, basis_bracket(g, k, i, l, j), s,
                                      unit(g.dim(s), t));
              Vec rhs = bracket(g, k, unit(g.dim(k), i), l + s, basis_bracket(g, l, j, s, t));
              const Vec r2 = bracket(g, l, unit(g.dim(l), j), k + s, basis_bracket(g, k, i, s, t));
              for (std::size_t q = 0; q < rhs.size(); ++q) rhs[q] -= r2[q];
              ++checked;
              if (lhs != rhs) {
                rep.witness = "violated at " + triple_str(k, i, l, j, s, t);
                rep.seconds = timer.seconds();
                return rep;
              }
            }
      }
  rep.pass = true;
  rep.witness = std::to_string(checked) + " triples checked";
  rep.seconds = timer.seconds();
  return rep;
}

Report verify_transitivity(const GradedLieAlgebra& g) {
  const Timer timer;
  Report rep;
  rep.name = "transitivity";
  std::ostringstream by_degree;
  for (int m = 2; m <= g.max_degree; ++m)
    for (int deg : {m, -m}) {
      const std::size_t dm = g.dim(deg);
      if (dm == 0) {
        by_degree << (by_degree.tellp() > 0 ? " " : "") << deg << ":empty";
        continue;
      }
      const int opp = deg > 0 ? -1 : 1;
      const std::size_t low = g.dim(deg + opp);
      // Row i is the full bracket of basis element i against every opposite
      // generator; a nonzero left kernel is an element killed by all of them.
      Mat stacked(dm, g.local.npos * low);
      const BracketTable& t = g.table(deg, opp);
      for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t j = 0; j < g.local.npos; ++j)
          for (std::size_t q = 0; q < low; ++q) stacked(i, j * low + q) = t.c[i][j][q];
      const std::vector<Vec> ker = kernel_basis(stacked);
      if (!ker.empty()) {
        std::ostringstream os;
        os << "degree " << deg << ": " << ker.size() << "-dimensional kernel, e.g. [";
        for (std::size_t q = 0; q < ker[0].size(); ++q) {
          if (q) os << ", ";
          os << ker[0][q];
        }
        os << "]";
        rep.witness = os.str();
        rep.seconds = timer.seconds();
        return rep;
      }
      by_degree << (by_degree.tellp() > 0 ? " " : "") << deg << ":ok";
    }
  rep.pass = true;
  rep.witness = by_degree.tellp() > 0 ? by_degree.str() : "no degrees beyond the local part";
  rep.seconds = timer.seconds();
  return rep;
}

Report verify_structure_constants(const GradedLieAlgebra& g) {
  const Timer timer;
  Report rep;
  rep.name = "structure-constants";
  for (const auto& [key, tab] : g.tables) {
    const auto [k, l] = key;
    const auto mirror = g.tables.find({l, k});
    if (mirror == g.tables.end()) {
      rep.witness = "missing mirror table for (" + std::to_string(k) + ", " + std::to_string(l) + ")";
      rep.seconds = timer.seconds();
      return rep;
    }
    for (std::size_t i = 0; i < g.dim(k); ++i)
      for (std::size_t j = 0; j < g.dim(l); ++j) {
        const Vec& v = tab.c[i][j];
        if (v.size() != g.dim(k + l)) {
          rep.witness = "wrong length at " + triple_str(k, i, l, j, k + l, v.size());
          rep.seconds = timer.seconds();
          return rep;
        }
        const Vec& w = mirror->second.c[j][i];
        for (std::size_t q = 0; q < v.size(); ++q)
          if (v[q] != -w[q]) {
            rep.witness = "antisymmetry fails at (" + std::to_string(k) + "#" +
                          std::to_string(i) + ", " + std::to_string(l) + "#" + std::to_string(j) + ")";
            rep.seconds = timer.seconds();
            return rep;
          }
        // Weight additivity: a nonzero coefficient may only sit on a basis
        // element whose weight is the sum of the factors' weights.
        Vec wsum = g.weight_of(k, i);
        const Vec wl = g.weight_of(l, j);
        for (std::size_t q = 0; q < wsum.size(); ++q) wsum[q] += wl[q];
        for (std::size_t q = 0; q < v.size(); ++q) {
          if (v[q].is_zero()) continue;
          if (g.weight_of(k + l, q) != wsum) {
            rep.witness = "weight mismatch at " + triple_str(k, i, l, j, k + l, q);
            rep.seconds = timer.seconds();
            return rep;
          }
        }
      }
  }
  rep.pass = true;
  rep.witness = std::to_string(g.tables.size()) + " tables checked";
  rep.seconds = timer.seconds();
  return rep;
}

}  // namespace plie
