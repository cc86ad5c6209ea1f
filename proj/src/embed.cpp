#include "plie/embed.hpp"

#include <stdexcept>

namespace plie {

CartanPentad sl2_pentad(std::size_t m) {
  CartanPentad p;
  p.r = 1;
  p.n = 2;
  p.a = Mat(1, 1);
  p.a(0, 0) = Scalar(1, 8);
  p.d = Mat(1, 2);
  p.d(0, 0) = Scalar(2);
  p.d(0, 1) = Scalar(-static_cast<long>(m));
  p.gamma = {Scalar(4), Scalar(4)};
  return p;
}

CartanPentad pentad_from_reductive(const ReductiveData& data) {
  const std::size_t r = data.dim_center + data.dim_cartan;
  if (r == 0) throw std::invalid_argument("reductive data: empty degree-0 slice");
  if (data.gram.rows() != r || data.gram.cols() != r)
    throw std::invalid_argument("shape mismatch: gram must be square of size dim_center + dim_cartan");
  if (data.gram != data.gram.transpose())
    throw std::invalid_argument("gram not symmetric");
  if (data.columns.rows() != r)
    throw std::invalid_argument("shape mismatch: columns must have dim_center + dim_cartan rows");
  Mat a;
  try {
    a = inverse(data.gram.transpose());
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("gram singular");
  }
  CartanPentad p;
  p.r = r;
  p.n = data.columns.cols();
  p.a = std::move(a);
  p.d = data.columns;
  p.gamma.assign(p.n, Scalar(1));
  validate(p);
  return p;
}

}  // namespace plie
