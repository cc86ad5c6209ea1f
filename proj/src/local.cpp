#include "plie/local.hpp"

#include <stdexcept>

namespace plie {

void validate(const LocalPart& local) {
  if (local.weights.rows() != local.dim0 || local.weights.cols() != local.npos)
    throw std::invalid_argument("local part: weights shape mismatch");
  if (local.pairing.size() != local.npos)
    throw std::invalid_argument("local part: pairing shape mismatch");
  for (const auto& row : local.pairing) {
    if (row.size() != local.npos)
      throw std::invalid_argument("local part: pairing shape mismatch");
    for (const Vec& v : row)
      if (v.size() != local.dim0)
        throw std::invalid_argument("local part: pairing entry length mismatch");
  }
  for (std::size_t i = 0; i < local.npos; ++i)
    for (std::size_t j = 0; j < local.npos; ++j) {
      if (is_zero(local.pairing[i][j])) continue;
      if (local.weights.col(i) != local.weights.col(j))
        throw std::invalid_argument("local part: pairing links generators of different weight");
    }
}

LocalPart local_from_cartan(const Mat& c) {
  if (c.rows() != c.cols()) throw std::invalid_argument("cartan matrix must be square");
  LocalPart local;
  local.dim0 = c.rows();
  local.npos = c.rows();
  local.weights = c;
  local.pairing.assign(local.npos, std::vector<Vec>(local.npos, zeros(local.dim0)));
  for (std::size_t i = 0; i < local.npos; ++i) local.pairing[i][i] = unit(local.dim0, i);
  return local;
}

LocalPart local_from_pentad(const CartanPentad& p) {
  validate(p);
  LocalPart local;
  local.dim0 = p.r;
  local.npos = p.n;
  local.weights = p.d;
  local.pairing.assign(p.n, std::vector<Vec>(p.n, zeros(p.r)));
  const Mat h = h_vectors(p);
  for (std::size_t i = 0; i < p.n; ++i) local.pairing[i][i] = h.row(i);
  return local;
}

}  // namespace plie
