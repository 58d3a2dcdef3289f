#include <doctest.h>

#include <stdexcept>

#include "daghilb/matrix.hpp"
#include "daghilb/rng.hpp"

using namespace daghilb;

namespace {

Morphism random_mat(Rng& rng, FieldTag f, int r, int c) {
  Morphism m(f, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = rng.scalar(f);
  return m;
}

}  // namespace

TEST_CASE("shape validation") {
  CHECK_THROWS_AS(Morphism(FieldTag::R, -1, 2), std::invalid_argument);
  Morphism a(FieldTag::R, 2, 3);
  CHECK_THROWS_AS(a.at(2, 0), std::out_of_range);
  CHECK_THROWS_AS(a.at(0, 3), std::out_of_range);
  Morphism b(FieldTag::R, 4, 2);
  CHECK_THROWS_AS(a * a, std::invalid_argument);  // 3 != 2
  CHECK_NOTHROW(a * b.submatrix(0, 0, 3, 2));
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  Morphism c(FieldTag::C, 2, 3);
  CHECK_THROWS_AS(a + c, std::invalid_argument);  // field mismatch
}

TEST_CASE("identity and basis columns") {
  const Morphism id = Morphism::identity(FieldTag::C, 3);
  CHECK(id.at(0, 0) == Scalar::one(FieldTag::C));
  CHECK(id.at(0, 1) == Scalar::zero(FieldTag::C));
  const Morphism e1 = Morphism::basis_column(FieldTag::C, 3, 1);
  CHECK(e1.rows() == 3);
  CHECK(e1.cols() == 1);
  CHECK(e1.at(1, 0) == Scalar::one(FieldTag::C));
  CHECK(distance(id * e1, e1) == 0.0);
  CHECK_THROWS_AS(Morphism::basis_column(FieldTag::C, 3, 3), std::invalid_argument);
}

TEST_CASE("multiplication against a hand-worked quaternion product") {
  const Scalar i = Scalar::unit(FieldTag::H, 1);
  const Scalar j = Scalar::unit(FieldTag::H, 2);
  const Scalar k = Scalar::unit(FieldTag::H, 3);
  const Morphism a = Morphism::from_rows(FieldTag::H, {{i, j}});
  const Morphism b = Morphism::from_rows(FieldTag::H, {{j}, {i}});
  // i*j + j*i = k - k = 0
  const Morphism p = a * b;
  CHECK(p.rows() == 1);
  CHECK(p.cols() == 1);
  CHECK(is_zero(p, 0.0));
  // but b*a is 2x2 and nonzero
  const Morphism q = b * a;
  CHECK(q.at(0, 0) == mul(j, i));
  CHECK(q.at(0, 0) == neg(k));
}

TEST_CASE("dagger is a conjugate-transpose involution and antihomomorphism") {
  Rng rng(21);
  for (FieldTag f : {FieldTag::R, FieldTag::C, FieldTag::H}) {
    const Morphism a = random_mat(rng, f, 3, 4);
    const Morphism b = random_mat(rng, f, 4, 2);
    CHECK(distance(dagger(dagger(a)), a) == 0.0);
    CHECK(distance(dagger(a * b), dagger(b) * dagger(a)) < 1e-13);
    CHECK(dagger(a).rows() == 4);
    CHECK(dagger(a).cols() == 3);
    CHECK(dagger(a).at(1, 2) == conj(a.at(2, 1)));
  }
}

TEST_CASE("inner product: right-linear in the first slot, conjugate in the second") {
  Rng rng(22);
  const FieldTag f = FieldTag::H;
  const Morphism u = random_mat(rng, f, 4, 1);
  const Morphism v = random_mat(rng, f, 4, 1);
  const Scalar lam = rng.scalar(f);
  CHECK(norm(sub(inner(u.scaled_right(lam), v), mul(inner(u, v), lam))) < 1e-12);
  CHECK(norm(sub(inner(u, v.scaled_right(lam)), mul(conj(lam), inner(u, v)))) < 1e-12);
  // <u, u> is a nonnegative real
  const Scalar uu = inner(u, u);
  CHECK(uu.w >= 0.0);
  CHECK(std::abs(uu.x) < 1e-14);
  CHECK(std::abs(uu.y) < 1e-14);
  CHECK(std::abs(uu.z) < 1e-14);
  CHECK_THROWS_AS(inner(u, random_mat(rng, f, 3, 1)), std::invalid_argument);
}

TEST_CASE("scaled_left and scaled_right differ over H") {
  const Scalar i = Scalar::unit(FieldTag::H, 1);
  const Scalar j = Scalar::unit(FieldTag::H, 2);
  const Morphism m = Morphism::from_rows(FieldTag::H, {{j}});
  CHECK(m.scaled_left(i).at(0, 0) == mul(i, j));
  CHECK(m.scaled_right(i).at(0, 0) == mul(j, i));
  CHECK(distance(m.scaled_left(i), m.scaled_right(i)) > 1.0);
}

TEST_CASE("stacking and blocks") {
  Rng rng(23);
  const Morphism a = random_mat(rng, FieldTag::C, 2, 3);
  const Morphism b = random_mat(rng, FieldTag::C, 2, 1);
  const Morphism h = hstack(a, b);
  CHECK(h.rows() == 2);
  CHECK(h.cols() == 4);
  CHECK(h.at(1, 3) == b.at(1, 0));
  const Morphism v = vstack(a, random_mat(rng, FieldTag::C, 1, 3));
  CHECK(v.rows() == 3);
  const Morphism d = direct_sum(a, b);
  CHECK(d.rows() == 4);
  CHECK(d.cols() == 4);
  CHECK(d.at(0, 0) == a.at(0, 0));
  CHECK(d.at(2, 3) == b.at(0, 0));
  CHECK(is_zero(d.submatrix(0, 3, 2, 1), 0.0));
  CHECK(is_zero(d.submatrix(2, 0, 2, 3), 0.0));
  CHECK_THROWS_AS(hstack(a, random_mat(rng, FieldTag::C, 3, 1)), std::invalid_argument);
  Morphism w = a;
  w.set_column(0, b.column(0));
  CHECK(w.at(0, 0) == b.at(0, 0));
  CHECK(w.at(0, 1) == a.at(0, 1));
}

TEST_CASE("zero-dimensional objects are legal") {
  const Morphism none(FieldTag::R, 0, 0);
  CHECK(frobenius_norm(none) == 0.0);
  const Morphism tall(FieldTag::R, 3, 0);
  const Morphism wide(FieldTag::R, 0, 3);
  const Morphism p = tall * wide;  // 3x3 zero
  CHECK(p.rows() == 3);
  CHECK(is_zero(p, 0.0));
  CHECK(dagger(tall).rows() == 0);
  CHECK(dagger(tall).cols() == 3);
}

TEST_CASE("norms and distance") {
  const Morphism m = Morphism::from_real_rows(FieldTag::R, {{3.0, 0.0}, {0.0, 4.0}});
  CHECK(frobenius_norm(m) == doctest::Approx(5.0));
  CHECK(max_abs(m) == doctest::Approx(4.0));
  CHECK(distance(m, m) == 0.0);
  CHECK(approx_equal(m, m, 0.0));
  const Morphism shifted = m + Morphism::identity(FieldTag::R, 2).scaled(1e-9);
  CHECK(!approx_equal(m, shifted, 1e-10));
  CHECK(approx_equal(m, shifted, 1e-8));
}

TEST_CASE("matrix promotion") {
  const Morphism r = Morphism::from_real_rows(FieldTag::R, {{1.0, 2.0}});
  const Morphism c = promote(r, FieldTag::C);
  CHECK(c.field() == FieldTag::C);
  CHECK(c.at(0, 1).w == 2.0);
  CHECK_THROWS_AS(promote(c, FieldTag::R), std::invalid_argument);
}
