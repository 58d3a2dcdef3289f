#pragma once
// The lattice of dagger subobjects of a fixed space H.  A subobject is kept
// as an isometry together with its range projection; two subobjects are the
// same element of the lattice when the projections agree.  The complement is
// the kernel of the dagger of the inclusion; joins are spans; meets are
// complement-join-complement so the whole lattice rides on one nullspace
// routine.  phi moves a subobject to the corresponding subspace of maps out
// of the generator, where it is again a projection.

#include <cstdint>

#include "daghilb/dagcat.hpp"

namespace daghilb {

class Subobject {
 public:
  // Orthonormalises the given spanning columns.
  static Subobject from_span(const Morphism& span,
                             const ToleranceProfile& tol = default_tol());
  // Accepts an existing isometry; rejects one that is not.
  static Subobject from_isometry(const Morphism& iso,
                                 const ToleranceProfile& tol = default_tol());
  static Subobject top(const FdObject& ambient);
  static Subobject bottom(const FdObject& ambient);

  const FdObject& ambient() const { return ambient_; }
  const Morphism& iso() const { return iso_; }
  const Morphism& proj() const { return proj_; }
  int dim() const { return iso_.cols(); }

 private:
  Subobject(FdObject ambient, Morphism iso);
  FdObject ambient_;
  Morphism iso_;
  Morphism proj_;  // iso * dagger(iso), cached
};

bool subobject_equal(const Subobject& a, const Subobject& b, double tol = 1e-8);
// a <= b as ranges: including a then projecting to b changes nothing.
bool leq(const Subobject& a, const Subobject& b, double tol = 1e-8);

Subobject orthocomplement(const Subobject& a, const ToleranceProfile& tol = default_tol());
Subobject join(const Subobject& a, const Subobject& b,
               const ToleranceProfile& tol = default_tol());
Subobject meet(const Subobject& a, const Subobject& b,
               const ToleranceProfile& tol = default_tol());

// Image of a subobject under the hom functor out of the generator: the same
// projection, now read as acting on coordinate vectors of maps K -> H.
struct HomSubspace {
  FdObject ambient;
  Morphism proj;

  bool contains(const Morphism& v, double tol = 1e-8) const;
};

HomSubspace phi(const Subobject& a);
Subobject subobject_of_hom(const HomSubspace& s, const ToleranceProfile& tol = default_tol());
HomSubspace hom_complement(const HomSubspace& s, const ToleranceProfile& tol = default_tol());
bool hom_leq(const HomSubspace& a, const HomSubspace& b, double tol = 1e-8);

// Samples subobjects of H and checks that a subobject and its complement tile
// the identity, together with the two-component recovery of sampled vectors.
Report check_orthomodular(const FdObject& h, int trials, std::uint64_t seed,
                          const ToleranceProfile& tol = default_tol());

}  // namespace daghilb
