#include <doctest.h>

#include <stdexcept>

#include "daghilb/rng.hpp"
#include "daghilb/scalar.hpp"

using namespace daghilb;

TEST_CASE("field tags parse and print") {
  CHECK(field_arity(FieldTag::R) == 1);
  CHECK(field_arity(FieldTag::C) == 2);
  CHECK(field_arity(FieldTag::H) == 4);
  CHECK(field_from_name("R") == FieldTag::R);
  CHECK(field_from_name("c") == FieldTag::C);
  CHECK(field_from_name("h") == FieldTag::H);
  CHECK(std::string(field_name(FieldTag::C)) == "C");
  CHECK_THROWS_AS(field_from_name("Q"), std::invalid_argument);
  CHECK(field_extends(FieldTag::H, FieldTag::R));
  CHECK(!field_extends(FieldTag::R, FieldTag::C));
}

TEST_CASE("construction respects arity") {
  CHECK_NOTHROW(Scalar(FieldTag::R, 2.0));
  CHECK_THROWS_AS(Scalar(FieldTag::R, 2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Scalar(FieldTag::C, 2.0, 1.0, 0.5), std::invalid_argument);
  CHECK_NOTHROW(Scalar(FieldTag::H, 1.0, 2.0, 3.0, 4.0));
}

TEST_CASE("hamilton table") {
  const Scalar i = Scalar::unit(FieldTag::H, 1);
  const Scalar j = Scalar::unit(FieldTag::H, 2);
  const Scalar k = Scalar::unit(FieldTag::H, 3);
  CHECK(mul(i, j) == k);
  CHECK(mul(j, i) == neg(k));
  CHECK(mul(j, k) == i);
  CHECK(mul(k, i) == j);
  CHECK(mul(i, i) == neg(Scalar::one(FieldTag::H)));
  CHECK(mul(j, j) == neg(Scalar::one(FieldTag::H)));
  CHECK(mul(k, k) == neg(Scalar::one(FieldTag::H)));
  CHECK_THROWS_AS(Scalar::unit(FieldTag::C, 3), std::invalid_argument);
}

TEST_CASE("complex multiplication matches the hand formula") {
  const Scalar a = Scalar::complex_val(1.0, 2.0);
  const Scalar b = Scalar::complex_val(-3.0, 0.5);
  const Scalar p = mul(a, b);
  CHECK(p.w == doctest::Approx(1.0 * -3.0 - 2.0 * 0.5));
  CHECK(p.x == doctest::Approx(1.0 * 0.5 + 2.0 * -3.0));
  CHECK(p.y == 0.0);
  CHECK(p.z == 0.0);
}

TEST_CASE("conjugation and inverse") {
  const Scalar q = Scalar::quaternion(1.0, -2.0, 0.5, 3.0);
  const Scalar qc = conj(q);
  CHECK(qc.w == 1.0);
  CHECK(qc.x == 2.0);
  CHECK(qc.y == -0.5);
  CHECK(qc.z == -3.0);
  CHECK(norm(mul(q, inv(q))) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(norm(sub(mul(inv(q), q), Scalar::one(FieldTag::H))) < 1e-12);
  CHECK_THROWS_AS(inv(Scalar::zero(FieldTag::C)), std::domain_error);
  CHECK(norm_sq(q) == doctest::Approx(1.0 + 4.0 + 0.25 + 9.0));
}

TEST_CASE("norm is multiplicative") {
  Rng rng(11);
  for (FieldTag f : {FieldTag::R, FieldTag::C, FieldTag::H})
    for (int t = 0; t < 200; ++t) {
      const Scalar a = rng.scalar(f), b = rng.scalar(f);
      CHECK(norm(mul(a, b)) == doctest::Approx(norm(a) * norm(b)).epsilon(1e-12));
    }
}

TEST_CASE("ring laws hold to rounding") {
  Rng rng(12);
  for (FieldTag f : {FieldTag::R, FieldTag::C, FieldTag::H})
    for (int t = 0; t < 200; ++t) {
      const Scalar a = rng.scalar(f), b = rng.scalar(f), c = rng.scalar(f);
      CHECK(norm(sub(mul(mul(a, b), c), mul(a, mul(b, c)))) < 1e-13);
      CHECK(norm(sub(mul(a, add(b, c)), add(mul(a, b), mul(a, c)))) < 1e-13);
      CHECK(norm(sub(conj(mul(a, b)), mul(conj(b), conj(a)))) < 1e-14);
      CHECK(add(a, neg(a)) == Scalar::zero(f));
    }
}

TEST_CASE("mixed fields refuse to combine") {
  const Scalar r = Scalar::real(1.0);
  const Scalar c = Scalar::complex_val(1.0, 0.0);
  CHECK_THROWS_AS(add(r, c), std::invalid_argument);
  CHECK_THROWS_AS(mul(r, c), std::invalid_argument);
}

TEST_CASE("promotion widens, never narrows") {
  const Scalar r = Scalar::real(2.5);
  const Scalar rc = promote(r, FieldTag::C);
  CHECK(rc.field == FieldTag::C);
  CHECK(rc.w == 2.5);
  const Scalar c = Scalar::complex_val(1.0, 1.0);
  CHECK(promote(c, FieldTag::H).field == FieldTag::H);
  CHECK_THROWS_AS(promote(c, FieldTag::R), std::invalid_argument);
}

TEST_CASE("scale and is_zero") {
  const Scalar c = Scalar::complex_val(2.0, -4.0);
  const Scalar half = scale(c, 0.5);
  CHECK(half.w == 1.0);
  CHECK(half.x == -2.0);
  CHECK(is_zero(Scalar::zero(FieldTag::H)));
  CHECK(!is_zero(half));
  CHECK(approx_equal(half, Scalar::complex_val(1.0, -2.0), 0.0));
}

TEST_CASE("rng streams are deterministic and name-separated") {
  Rng a = stream(7, "check-one");
  Rng b = stream(7, "check-one");
  Rng c = stream(7, "check-two");
  CHECK(a.next() == b.next());
  CHECK(a.next() == b.next());
  Rng a2 = stream(7, "check-one");
  CHECK(a2.next() != c.next());  // different names, different streams
  const double u = Rng(3).uniform();
  CHECK(u >= 0.0);
  CHECK(u < 1.0);
  for (int t = 0; t < 100; ++t) {
    const int v = Rng(static_cast<std::uint64_t>(t)).uniform_int(2, 5);
    CHECK(v >= 2);
    CHECK(v <= 5);
  }
  CHECK(norm(Rng(9).unit_scalar(FieldTag::H)) == doctest::Approx(1.0).epsilon(1e-12));
}
