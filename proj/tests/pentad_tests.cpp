#include <doctest.h>

#include "battery.hpp"
#include "plie/pentad.hpp"

using namespace plie;
using namespace plie::testing;

TEST_CASE("validate accepts the sl2 family") {
  CHECK_NOTHROW(validate(sl2_pentad(3)));
  for (const auto& item : battery()) CHECK_NOTHROW(validate(item.pentad));
}

TEST_CASE("validate rejects bad data") {
  CartanPentad p = sl2_pentad(3);
  p.a(0, 0) = Scalar(0);
  CHECK_THROWS_WITH_AS(validate(p), "A singular", std::invalid_argument);

  p = sl2_pentad(3);
  p.gamma[1] = Scalar(0);
  CHECK_THROWS_WITH_AS(validate(p), "gamma entry zero", std::invalid_argument);

  p = sl2_pentad(3);
  p.d = Mat(2, 2);
  CHECK_THROWS_AS(validate(p), std::invalid_argument);

  p = sl2_pentad(3);
  p.r = 0;
  CHECK_THROWS_AS(validate(p), std::invalid_argument);
}

TEST_CASE("cartan matrix of the sl2 family") {
  // m = 3 instance of the family formula [[2, -m], [-m, m^2/2]].
  Mat expected(2, 2);
  expected(0, 0) = Scalar(2);
  expected(0, 1) = Scalar(-3);
  expected(1, 0) = Scalar(-3);
  expected(1, 1) = Scalar(9, 2);
  CHECK(cartan_matrix(sl2_pentad(3)) == expected);
}

TEST_CASE("cartan matrix trivial products") {
  CartanPentad p;
  p.r = 1;
  p.n = 1;
  p.a = Mat::identity(1);
  p.d = Mat::identity(1);
  p.gamma = {Scalar(1)};
  CHECK(cartan_matrix(p) == Mat::identity(1));

  CHECK(cartan_matrix(rank_deficient_pentad()) == Mat(1, 1));
}

TEST_CASE("h vectors") {
  const Mat h = h_vectors(sl2_pentad(3));
  REQUIRE(h.rows() == 2);
  REQUIRE(h.cols() == 1);
  CHECK(h(0, 0) == Scalar(1));
  CHECK(h(1, 0) == Scalar(-3, 2));

  // Zero column of d gives a zero h row.
  const Mat hz = h_vectors(zero_column_pentad());
  CHECK(hz.row(0) == Vec{Scalar(1)});
  CHECK(hz.row(1) == Vec{Scalar(0)});

  CartanPentad q;
  q.r = 2;
  q.n = 1;
  q.a = Mat::identity(2);
  q.d = Mat(2, 1);
  q.d(0, 0) = Scalar(1);
  q.gamma = {Scalar(1)};
  CHECK(h_vectors(q).row(0) == Vec{Scalar(1), Scalar(0)});
}

TEST_CASE("span analysis of the sl2 family") {
  const SpanAnalysis a = analyze_spans(sl2_pentad(3));
  CHECK(a.rank_d == 1);
  CHECK(a.rank_c == 1);
  CHECK(a.dim_bracket == 1);
  CHECK(a.dim_ann == 0);
  CHECK(a.dim_intersection == 0);
}

TEST_CASE("span analysis of the rank-deficient pentad") {
  const SpanAnalysis a = analyze_spans(rank_deficient_pentad());
  CHECK(a.rank_d == 1);
  CHECK(a.rank_c == 0);
  CHECK(a.dim_bracket == 1);
  CHECK(a.dim_ann == 1);
  CHECK(a.dim_intersection == 1);
  REQUIRE(a.intersection_basis.size() == 1);
  CHECK(a.intersection_basis[0] == Vec{Scalar(0), Scalar(1)});
}

TEST_CASE("span analysis of a full-rank square pentad") {
  CartanPentad p;
  p.r = 2;
  p.n = 2;
  p.a = Mat::identity(2);
  p.d = Mat::identity(2);
  p.gamma = {Scalar(1), Scalar(1)};
  const SpanAnalysis a = analyze_spans(p);
  CHECK(a.dim_bracket == 2);
  CHECK(a.dim_ann == 0);
  CHECK(a.dim_intersection == 0);
}

TEST_CASE("span analysis bases satisfy their defining equations") {
  for (const auto& item : battery()) {
    const SpanAnalysis a = analyze_spans(item.pentad);
    CHECK(a.dim_bracket + a.dim_ann == item.pentad.r);
    CHECK(a.dim_intersection == a.rank_d - a.rank_c);
    for (const Vec& v : a.ann_basis) CHECK(is_zero(mul(v, item.pentad.d)));
    EchelonTracker rowspace(item.pentad.r);
    for (std::size_t i = 0; i < a.h_rows.rows(); ++i) rowspace.add(a.h_rows.row(i));
    for (const Vec& v : a.intersection_basis) {
      CHECK(is_zero(mul(v, item.pentad.d)));
      CHECK(rowspace.contains(v));
    }
  }
}

TEST_CASE("strip zero columns") {
  const StripResult s = strip_zero_columns(zero_column_pentad());
  CHECK(s.removed == std::vector<std::size_t>{1});
  CHECK(s.pentad.n == 1);
  CHECK(s.pentad.d == Mat::identity(1));
  CHECK(s.pentad.gamma == std::vector<Scalar>{Scalar(1)});

  const StripResult none = strip_zero_columns(a2_pentad());
  CHECK(none.removed.empty());
  CHECK(none.pentad == a2_pentad());

  CartanPentad all_zero;
  all_zero.r = 1;
  all_zero.n = 2;
  all_zero.a = Mat::identity(1);
  all_zero.d = Mat(1, 2);
  all_zero.gamma = {Scalar(1), Scalar(1)};
  const StripResult empty = strip_zero_columns(all_zero);
  CHECK(empty.removed == std::vector<std::size_t>{0, 1});
  CHECK(empty.pentad.n == 0);
  CHECK_NOTHROW(validate(empty.pentad));
}

TEST_CASE("stripping deletes the matching cartan rows and columns") {
  CartanPentad p = sl2_pentad(0);  // d = (2 0): column 1 is zero
  const StripResult s = strip_zero_columns(p);
  REQUIRE(s.removed == std::vector<std::size_t>{1});
  const Mat full = cartan_matrix(p);
  const Mat small = cartan_matrix(s.pentad);
  REQUIRE(small.rows() == 1);
  CHECK(small(0, 0) == full(0, 0));

  // Interleaved zero columns: the stripped cartan matrix is the minor of the
  // full one on the kept indices.
  CartanPentad q;
  q.r = 2;
  q.n = 4;
  q.a = Mat(2, 2);
  q.a(0, 0) = Scalar(1);
  q.a(0, 1) = Scalar(2);
  q.a(1, 1) = Scalar(-1);
  q.d = Mat(2, 4);
  q.d(0, 1) = Scalar(1);  // columns 0 and 2 stay zero
  q.d(1, 3) = Scalar(-3);
  q.d(0, 3) = Scalar(1, 2);
  q.gamma = {Scalar(5), Scalar(1, 3), Scalar(-2), Scalar(7)};
  const StripResult sq = strip_zero_columns(q);
  REQUIRE(sq.removed == std::vector<std::size_t>{0, 2});
  const std::vector<std::size_t> kept{1, 3};
  const Mat cf = cartan_matrix(q);
  const Mat cs = cartan_matrix(sq.pentad);
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t j = 0; j < kept.size(); ++j) CHECK(cs(i, j) == cf(kept[i], kept[j]));
}

TEST_CASE("rank chain and zero-column propagation") {
  for (const auto& item : battery()) {
    const CartanPentad& p = item.pentad;
    const Mat c = cartan_matrix(p);
    const std::size_t rd = rank(p.d);
    CHECK(rank(c) <= rd);
    CHECK(rd <= std::min(p.r, p.n));
    CHECK(rank(h_vectors(p)) == rd);
    for (std::size_t j = 0; j < p.n; ++j) {
      if (!is_zero(p.d.col(j))) continue;
      CHECK(is_zero(c.row(j)));
      CHECK(is_zero(c.col(j)));
    }
  }
}
