#pragma once
// Complex adjoint embedding of quaternionic matrices, plus full realification.
// Writing an entry as q = a + b j with a, b complex, an n x m quaternionic
// matrix becomes the 2n x 2m complex matrix
//
//     [  A        B       ]
//     [ -conj(B)  conj(A) ]
//
// which is a *-algebra map: products, sums and daggers pass through it, so
// spectral routines can run on the complex side and fold back.

#include "daghilb/matrix.hpp"

namespace daghilb {

// H (n x m) -> C (2n x 2m).
Morphism embed_complex(const Morphism& a);

// Inverse of embed_complex.  The lower blocks must mirror the upper ones
// within `sym_tol`, otherwise the input is not the image of a quaternionic
// matrix and an invalid_argument is thrown.
Morphism unembed_complex(const Morphism& e, double sym_tol = 1e-8);

// Any field (n x m) -> R (d n x d m) with d the field arity: the matrix of
// left multiplication acting on real coordinates, one (1, i, j, k) block per
// slot.  Composition and addition pass through.
Morphism realify(const Morphism& a);

// Real (d n x d n) matrix of v |-> v * lambda on the same coordinates.  Right
// scalar action commutes with every realified matrix; that commutation is the
// operational test for H-linearity of a real map.
Morphism right_mult_matrix(FieldTag f, int n, const Scalar& lambda);

}  // namespace daghilb
