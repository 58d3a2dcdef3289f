#pragma once

// Tensor structure on the real and complex models, and the demonstration
// that the quaternionic model cannot carry one compatibly.  The tensor of
// matrices is the Kronecker product; over H that formula is not even
// middle-linear (scalars do not commute past each other), so tensor() refuses
// the quaternionic field outright and quaternionic_obstruction() packages the
// refusal as a checkable fact.

#include <cstdint>

#include "daghilb/fdobject.hpp"
#include "daghilb/matrix.hpp"
#include "daghilb/report.hpp"
#include "daghilb/tolerance.hpp"

namespace daghilb {

// Kronecker product.  Entry ((i*rowsB + k), (j*colsB + l)) = a(i,j) * b(k,l).
// Throws std::domain_error for quaternionic operands.
Morphism tensor(const Morphism& a, const Morphism& b);

// Coherence isomorphisms for the flattening above.  All three are honest
// permutation-size identity matrices here, but they are *built* from the
// index bijections so the coherence checks exercise real code.  Like the
// tensor itself they refuse the quaternionic field.
Morphism associator(FieldTag f, int a, int b, int c);   // (A@B)@C -> A@(B@C)
Morphism left_unitor(FieldTag f, int a);                // K@A -> A
Morphism right_unitor(FieldTag f, int a);               // A@K -> A

// Pentagon and triangle coherence plus naturality of the unitors, sampled.
Report check_monoidal_coherence(FieldTag f, int trials, std::uint64_t seed,
                                const ToleranceProfile& tol = default_tol());

// Scalar action two ways: f . lam (tensor with a 1x1 map, conjugated by
// unitors) against plain composition with lam * identity.  Equality is what
// makes the scalar action via tensor agree with the scalar action morphisms
// already have.
Report check_bullet_equals_circ(FieldTag f, int trials, std::uint64_t seed,
                                const ToleranceProfile& tol = default_tol());

// Why H gets no tensor: middle linearity would force scalars to commute.
// Exhibits i*j = k against j*i = -k, and runs the unit-dimension argument
// (a unitor K@A -> A forces dim K = 1, and a 1-dimensional unit cannot
// absorb a noncommutative scalar acting on both sides).  The Report records
// explicitly that these are witnesses, not a general impossibility proof.
Report quaternionic_obstruction(std::uint64_t seed);

}  // namespace daghilb
