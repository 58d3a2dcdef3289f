#include "daghilb/subobject.hpp"

#include <stdexcept>
#include <string>

#include "daghilb/rng.hpp"

namespace daghilb {

Subobject::Subobject(FdObject ambient, Morphism iso)
    : ambient_(ambient), iso_(std::move(iso)), proj_(iso_ * dagger(iso_)) {}

Subobject Subobject::from_span(const Morphism& span, const ToleranceProfile& tol) {
  return Subobject(FdObject(span.field(), span.rows()), range_basis(span, tol));
}

Subobject Subobject::from_isometry(const Morphism& iso, const ToleranceProfile& tol) {
  if (!is_isometry(iso, tol.structure))
    throw std::invalid_argument("columns do not form an isometry");
  return Subobject(FdObject(iso.field(), iso.rows()), iso);
}

Subobject Subobject::top(const FdObject& ambient) {
  return Subobject(ambient, Morphism::identity(ambient.field, ambient.dim));
}

Subobject Subobject::bottom(const FdObject& ambient) {
  return Subobject(ambient, Morphism(ambient.field, ambient.dim, 0));
}

namespace {
void require_same_ambient(const Subobject& a, const Subobject& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("subobjects live in different ambient spaces");
}
}  // namespace

bool subobject_equal(const Subobject& a, const Subobject& b, double tol) {
  require_same_ambient(a, b);
  return distance(a.proj(), b.proj()) <= tol;
}

bool leq(const Subobject& a, const Subobject& b, double tol) {
  require_same_ambient(a, b);
  return distance(b.proj() * a.iso(), a.iso()) <= tol;
}

Subobject orthocomplement(const Subobject& a, const ToleranceProfile& tol) {
  return Subobject::from_isometry(kernel(dagger(a.iso()), tol), tol);
}

Subobject join(const Subobject& a, const Subobject& b, const ToleranceProfile& tol) {
  require_same_ambient(a, b);
  return Subobject::from_span(hstack(a.iso(), b.iso()), tol);
}

Subobject meet(const Subobject& a, const Subobject& b, const ToleranceProfile& tol) {
  return orthocomplement(join(orthocomplement(a, tol), orthocomplement(b, tol), tol), tol);
}

bool HomSubspace::contains(const Morphism& v, double tol) const {
  return distance(proj * v, v) <= tol * std::max(1.0, frobenius_norm(v));
}

HomSubspace phi(const Subobject& a) {
  // Maps K -> H are columns of H, so the subspace of maps factoring through a
  // is cut out by the very same projection.
  return HomSubspace{a.ambient(), a.proj()};
}

Subobject subobject_of_hom(const HomSubspace& s, const ToleranceProfile& tol) {
  return Subobject::from_span(s.proj, tol);
}

HomSubspace hom_complement(const HomSubspace& s, const ToleranceProfile& tol) {
  return phi(orthocomplement(subobject_of_hom(s, tol), tol));
}

bool hom_leq(const HomSubspace& a, const HomSubspace& b, double tol) {
  if (a.ambient != b.ambient)
    throw std::invalid_argument("hom subspaces live in different ambient spaces");
  return distance(b.proj * a.proj, a.proj) <= tol;
}

Report check_orthomodular(const FdObject& h, int trials, std::uint64_t seed,
                          const ToleranceProfile& tol) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  Report report;

  CheckResult split;
  split.check = std::string("ortholattice.") + field_name(h.field) + ".projection-split";
  split.statement_ref = "ortholattice.orthomodular";
  CheckResult recover;
  recover.check = std::string("ortholattice.") + field_name(h.field) + ".vector-recovery";
  recover.statement_ref = "ortholattice.orthomodular";

  Rng rng = stream(seed, split.check);
  const Morphism id = Morphism::identity(h.field, h.dim);
  for (int t = 0; t < trials; ++t) {
    const int d = rng.uniform_int(0, h.dim);
    Morphism span(h.field, h.dim, d);
    for (int i = 0; i < h.dim; ++i)
      for (int j = 0; j < d; ++j) span.at(i, j) = rng.scalar(h.field);
    const Subobject m = Subobject::from_span(span, tol);
    const Subobject mp = orthocomplement(m, tol);

    // m m^dag + mp mp^dag = 1: the subobject and its complement tile the space.
    split.trial(distance(m.proj() + mp.proj(), id), 1e-10, seed,
                "projection sum at dim " + std::to_string(m.dim()));

    Morphism v(h.field, h.dim, 1);
    for (int i = 0; i < h.dim; ++i) v.at(i, 0) = rng.scalar(h.field);
    const Morphism back = m.proj() * v + mp.proj() * v;
    recover.trial(distance(back, v) / std::max(1.0, frobenius_norm(v)), 1e-10, seed,
                  "vector recovery at dim " + std::to_string(m.dim()));
  }

  report.add(split);
  report.add(recover);
  return report;
}

}  // namespace daghilb
