#pragma once
// The dagger-categorical layer over the matrix model: biproducts with their
// projection/injection data, equalizers and kernels as isometries, the
// image factorisation, and the morphism classes (dagger mono/epi, unitary).
// Addition of parallel morphisms is *derived* here, not assumed: f + g is
// literally the composite codiagonal . (f (+) g) . diagonal.

#include <cstdint>
#include <utility>

#include "daghilb/factor.hpp"
#include "daghilb/fdobject.hpp"
#include "daghilb/report.hpp"

namespace daghilb {

struct Biproduct {
  FdObject left, right, total;
  Morphism p;  // total -> left,  [I 0]
  Morphism q;  // total -> right, [0 I]
  Morphism i;  // left  -> total, dagger(p)
  Morphism j;  // right -> total, dagger(q)
};

Biproduct biproduct(const FdObject& a, const FdObject& b);

// Delta_A = <1, 1>: A -> A (+) A and its dagger nabla_A: A (+) A -> A.
Morphism diagonal(FieldTag f, int dim);
Morphism codiagonal(FieldTag f, int dim);

// nabla . (f (+) g) . delta, the biproduct-induced sum of parallel morphisms.
Morphism add_via_biproduct(const Morphism& f, const Morphism& g);

// Dagger equalizer of a parallel pair: isometry e with f e = g e, universal.
Morphism equalizer(const Morphism& f, const Morphism& g,
                   const ToleranceProfile& tol = default_tol());

// kernel(f) = equalizer(f, 0).
Morphism kernel(const Morphism& f, const ToleranceProfile& tol = default_tol());

// Pushout injections of f along itself: maps f1, f2 with f1 f = f2 f, jointly
// universal.  The equalizer of this pair recovers the image of f.
std::pair<Morphism, Morphism> cokernel_pair(const Morphism& f,
                                            const ToleranceProfile& tol = default_tol());

struct Factorization {
  Morphism e;  // surjection onto the image coordinates
  Morphism m;  // isometry embedding the image, f = m e
};

Factorization factorize(const Morphism& f, const ToleranceProfile& tol = default_tol());

bool is_dagger_mono(const Morphism& f, double tol);
bool is_dagger_epi(const Morphism& f, double tol);
bool is_unitary(const Morphism& f, double tol);
// Plain mono: trivial kernel.
bool is_mono(const Morphism& f, const ToleranceProfile& tol = default_tol());
// Plain epi: image spans the codomain.
bool is_epi(const Morphism& f, const ToleranceProfile& tol = default_tol());

// Randomized witnesses that the scalars End(K) form an involutive division
// ring: sampled inverses, the additive inverse of 1 read off the kernel of
// the codiagonal on K (+) K, and simplicity of K.
Report verify_scalar_field(FieldTag f, int trials, std::uint64_t seed,
                           const ToleranceProfile& tol = default_tol());

}  // namespace daghilb
