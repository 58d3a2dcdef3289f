#include <doctest.h>

#include <stdexcept>

#include "daghilb/rng.hpp"
#include "daghilb/subobject.hpp"

using namespace daghilb;

namespace {

Morphism random_mat(Rng& rng, FieldTag f, int r, int c) {
  Morphism m(f, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = rng.scalar(f);
  return m;
}

Subobject axis_pair(FieldTag f, int n, int a, int b) {
  return Subobject::from_span(
      hstack(Morphism::basis_column(f, n, a), Morphism::basis_column(f, n, b)));
}

}  // namespace

TEST_CASE("span construction collapses dependent columns") {
  Rng rng(71);
  const Morphism v = random_mat(rng, FieldTag::H, 4, 1);
  const Morphism span = hstack(v, v.scaled_right(rng.nonzero_scalar(FieldTag::H)));
  const Subobject s = Subobject::from_span(span);
  CHECK(s.dim() == 1);
  CHECK(s.ambient().dim == 4);
  CHECK(is_isometry(s.iso(), 1e-12));
  // the projection fixes v
  CHECK(distance(s.proj() * v, v) < 1e-10);
  CHECK_THROWS_AS(Subobject::from_isometry(span), std::invalid_argument);
}

TEST_CASE("top, bottom and equality") {
  const FdObject h(FieldTag::C, 3);
  const Subobject top = Subobject::top(h);
  const Subobject bot = Subobject::bottom(h);
  CHECK(top.dim() == 3);
  CHECK(bot.dim() == 0);
  CHECK(subobject_equal(top, Subobject::from_span(Morphism::identity(FieldTag::C, 3))));
  CHECK(leq(bot, top));
  CHECK(leq(top, top));
  CHECK(!leq(top, bot));
  // the same plane given by two different bases is one subobject
  const Morphism e0 = Morphism::basis_column(FieldTag::C, 3, 0);
  const Morphism e1 = Morphism::basis_column(FieldTag::C, 3, 1);
  const Subobject a = Subobject::from_span(hstack(e0, e1));
  const Subobject b = Subobject::from_span(hstack(e0 + e1, e0 - e1));
  CHECK(subobject_equal(a, b));
}

TEST_CASE("known joins, meets and complements on coordinate planes") {
  const FieldTag f = FieldTag::R;
  const int n = 4;
  const Subobject xy = axis_pair(f, n, 0, 1);
  const Subobject yz = axis_pair(f, n, 1, 2);
  const Subobject j = join(xy, yz);
  CHECK(j.dim() == 3);
  const Subobject m = meet(xy, yz);
  CHECK(m.dim() == 1);
  CHECK(subobject_equal(m, Subobject::from_span(Morphism::basis_column(f, n, 1))));
  const Subobject c = orthocomplement(xy);
  CHECK(c.dim() == 2);
  CHECK(subobject_equal(c, axis_pair(f, n, 2, 3)));
  // the complemented pair tiles the identity
  CHECK(distance(xy.proj() + c.proj(), Morphism::identity(f, n)) < 1e-12);
  // de Morgan: complement of the join is the meet of the complements
  CHECK(subobject_equal(orthocomplement(j), meet(orthocomplement(xy), orthocomplement(yz))));
}

TEST_CASE("lattice laws on random subobjects") {
  Rng rng(72);
  for (FieldTag f : {FieldTag::R, FieldTag::C, FieldTag::H})
    for (int t = 0; t < 10; ++t) {
      const int n = rng.uniform_int(2, 5);
      const FdObject h(f, n);
      const Subobject a = Subobject::from_span(random_mat(rng, f, n, rng.uniform_int(0, n)));
      const Subobject b = Subobject::from_span(random_mat(rng, f, n, rng.uniform_int(0, n)));
      CHECK(subobject_equal(orthocomplement(orthocomplement(a)), a));
      CHECK(leq(meet(a, b), a));
      CHECK(leq(a, join(a, b)));
      CHECK(subobject_equal(join(a, b), join(b, a)));
      CHECK(subobject_equal(meet(a, orthocomplement(a)), Subobject::bottom(h)));
      CHECK(subobject_equal(join(a, orthocomplement(a)), Subobject::top(h)));
      // orthomodularity: a <= b implies b = a v (b ^ a-perp)
      const Subobject big = join(a, b);
      CHECK(subobject_equal(big, join(a, meet(big, orthocomplement(a)))));
    }
}

TEST_CASE("phi transports the lattice into hom subspaces faithfully") {
  Rng rng(73);
  for (FieldTag f : {FieldTag::R, FieldTag::C, FieldTag::H})
    for (int t = 0; t < 10; ++t) {
      const int n = rng.uniform_int(2, 5);
      const Subobject a = Subobject::from_span(random_mat(rng, f, n, rng.uniform_int(1, n)));
      const Subobject b = Subobject::from_span(random_mat(rng, f, n, rng.uniform_int(1, n)));
      const HomSubspace ha = phi(a), hb = phi(b);
      // order transports both ways
      CHECK(hom_leq(ha, hb) == leq(a, b));
      CHECK(hom_leq(hb, ha) == leq(b, a));
      // complements commute with phi
      const HomSubspace hc = hom_complement(ha);
      CHECK(distance(hc.proj, phi(orthocomplement(a)).proj) < 1e-8);
      // and the round trip returns the same subobject
      CHECK(subobject_equal(subobject_of_hom(ha), a));
      // membership: columns of the inclusion are maps K -> H that land in a
      for (int jcol = 0; jcol < a.dim(); ++jcol)
        CHECK(ha.contains(a.iso().column(jcol)));
      if (a.dim() < n)
        CHECK(!ha.contains(orthocomplement(a).iso().column(0)));
    }
}

TEST_CASE("orthomodular check passes on every field") {
  for (FieldTag f : {FieldTag::R, FieldTag::C, FieldTag::H}) {
    const Report rep = check_orthomodular(FdObject(f, 4), 25, 5);
    CHECK(rep.all_passed());
    CHECK(rep.worst_residual() < 1e-10);
  }
}

TEST_CASE("mismatched ambients are refused") {
  const Subobject a = Subobject::from_span(Morphism::basis_column(FieldTag::R, 3, 0));
  const Subobject b = Subobject::from_span(Morphism::basis_column(FieldTag::R, 4, 0));
  CHECK_THROWS_AS(join(a, b), std::invalid_argument);
  CHECK_THROWS_AS(meet(a, b), std::invalid_argument);
  const Subobject c = Subobject::from_span(Morphism::basis_column(FieldTag::C, 3, 0));
  CHECK_THROWS_AS(join(a, c), std::invalid_argument);
}
