#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "daghilb/factor.hpp"
#include "daghilb/rng.hpp"

using namespace daghilb;

namespace {

Morphism random_mat(Rng& rng, FieldTag f, int r, int c) {
  Morphism m(f, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = rng.scalar(f);
  return m;
}

Morphism random_self_adjoint(Rng& rng, FieldTag f, int n) {
  const Morphism a = random_mat(rng, f, n, n);
  return (a + dagger(a)).scaled(0.5);
}

}  // namespace

TEST_CASE("gram_schmidt finds the rank and returns an isometry") {
  Rng rng(31);
  for (FieldTag f : {FieldTag::R, FieldTag::C, FieldTag::H}) {
    const Morphism a = random_mat(rng, f, 5, 3);
    // duplicate a column with a scalar factor: rank stays 3 columns -> 3
    Morphism padded = hstack(a, a.column(1).scaled_right(rng.nonzero_scalar(f)));
    const IsometryResult res = gram_schmidt(padded);
    CHECK(res.rank == 3);
    CHECK(res.iso.cols() == 3);
    CHECK(is_isometry(res.iso, 1e-12));
    // original columns stay in the span: projecting changes nothing
    const Morphism proj = res.iso * dagger(res.iso);
    CHECK(distance(proj * a, a) < 1e-10);
  }
}

TEST_CASE("nullspace: rank plus nullity is exact by construction") {
  Rng rng(32);
  for (FieldTag f : {FieldTag::R, FieldTag::C, FieldTag::H})
    for (int t = 0; t < 10; ++t) {
      const int n = rng.uniform_int(2, 6);
      const int r = rng.uniform_int(0, n);
      // build a matrix of known rank r
      const Morphism a = random_mat(rng, f, n, r);
      const Morphism b = random_mat(rng, f, r, n);
      const Morphism m = r == 0 ? Morphism(f, n, n) : a * b;
      const Morphism null = nullspace(m);
      const int rank = range_basis(m).cols();
      CHECK(rank == r);
      CHECK(null.cols() == n - rank);
      CHECK(is_isometry(null, 1e-10));
      CHECK(frobenius_norm(m * null) < 1e-8);
    }
}

TEST_CASE("orthonormal_complement completes a basis") {
  Rng rng(33);
  const Morphism iso = gram_schmidt(random_mat(rng, FieldTag::H, 5, 2)).iso;
  const Morphism rest = orthonormal_complement(iso);
  CHECK(rest.cols() == 3);
  const Morphism full = hstack(iso, rest);
  CHECK(is_unitary_matrix(full, 1e-10));
}

TEST_CASE("jacobi agrees with the embedding route over H") {
  Rng rng(34);
  for (int t = 0; t < 5; ++t) {
    const Morphism a = random_self_adjoint(rng, FieldTag::H, 4);
    const EigenResult direct = jacobi_hermitian(a);
    const EigenResult via = hermitian_eigen(a);
    REQUIRE(direct.values.size() == via.values.size());
    for (size_t i = 0; i < direct.values.size(); ++i)
      CHECK(direct.values[i] == doctest::Approx(via.values[i]).epsilon(1e-8));
    // both reconstruct
    for (const EigenResult* er : {&direct, &via}) {
      Morphism rec(FieldTag::H, 4, 4);
      for (int j = 0; j < 4; ++j)
        rec.set_column(j, er->vectors.column(j).scaled_right(
                              Scalar::real(er->values[static_cast<size_t>(j)], FieldTag::H)));
      rec = rec * dagger(er->vectors);
      CHECK(distance(rec, a) < 1e-8);
      CHECK(is_unitary_matrix(er->vectors, 1e-8));
    }
  }
}

TEST_CASE("known 2x2 spectrum") {
  const Morphism a = Morphism::from_real_rows(FieldTag::R, {{2.0, 1.0}, {1.0, 2.0}});
  const EigenResult er = hermitian_eigen(a);
  REQUIRE(er.values.size() == 2);
  CHECK(er.values[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(er.values[1] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK_THROWS_AS(hermitian_eigen(Morphism::from_real_rows(FieldTag::R, {{0.0, 1.0}, {0.0, 0.0}})),
                  std::invalid_argument);
}

TEST_CASE("sqrt_psd squares back and rejects bad input") {
  Rng rng(35);
  const Morphism b = random_mat(rng, FieldTag::C, 4, 4);
  const Morphism psd = dagger(b) * b;
  const Morphism root = sqrt_psd(psd);
  CHECK(distance(root * root, psd) < 1e-8);
  CHECK(is_self_adjoint(root, 1e-10));
  // genuinely negative spectrum is refused
  const Morphism neg = Morphism::from_real_rows(FieldTag::C, {{-1.0}});
  CHECK_THROWS_AS(sqrt_psd(neg), std::domain_error);
  CHECK_THROWS_AS(sqrt_psd(Morphism::from_real_rows(FieldTag::C, {{0.0, 1.0}, {0.0, 0.0}})),
                  std::invalid_argument);  // not self-adjoint at all
}

TEST_CASE("polar decomposition of an invertible matrix") {
  Rng rng(36);
  for (FieldTag f : {FieldTag::R, FieldTag::C, FieldTag::H}) {
    const Morphism q = random_mat(rng, f, 4, 4) + Morphism::identity(f, 4).scaled(5.0);
    const PolarResult pr = polar(q);
    CHECK(is_unitary_matrix(pr.unitary, 1e-9));
    CHECK(is_self_adjoint(pr.positive, 1e-9));
    CHECK(distance(pr.unitary * pr.positive, q) < 1e-8);
  }
  // singular input is refused
  const Morphism sing = Morphism::from_real_rows(FieldTag::R, {{1.0, 0.0}, {0.0, 0.0}});
  CHECK_THROWS_AS(polar(sing), std::domain_error);
}

TEST_CASE("operator norm matches known values") {
  const Morphism m = Morphism::from_real_rows(FieldTag::R, {{3.0, 0.0}, {0.0, -4.0}});
  CHECK(operator_norm(m) == doctest::Approx(4.0).epsilon(1e-10));
  // rank-one: norm equals the product of the vector lengths
  const Morphism u = Morphism::from_real_rows(FieldTag::R, {{3.0}, {4.0}});
  CHECK(operator_norm(u * dagger(u)) == doctest::Approx(25.0).epsilon(1e-10));
  CHECK(operator_norm(Morphism(FieldTag::C, 3, 2)) == 0.0);
}
