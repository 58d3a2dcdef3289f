#pragma once
// Orthogonal factorisations over R, C and H.  Everything here reduces to two
// kernels: modified Gram-Schmidt (which works verbatim over a noncommutative
// division ring as long as coefficients multiply vectors on the right) and a
// cyclic Jacobi eigensolver for self-adjoint matrices.  Quaternionic spectral
// calls route through the complex adjoint embedding; the generic Jacobi kernel
// is exposed so the two paths can be checked against each other.

#include <utility>
#include <vector>

#include "daghilb/matrix.hpp"

namespace daghilb {

struct IsometryResult {
  Morphism iso;  // n x rank, dagger(iso) * iso = I
  int rank{0};
};

// Orthonormalises the columns of `m` (one reorthogonalisation pass); columns
// whose residual drops below tol.drop times their input norm are discarded.
IsometryResult gram_schmidt(const Morphism& m, const ToleranceProfile& tol = default_tol());

// Isometry whose range is the column span of `a`.
Morphism range_basis(const Morphism& a, const ToleranceProfile& tol = default_tol());

// Isometry onto { v : a v = 0 }.  Always returns exactly
// cols(a) - cols(range_basis(a)) columns, so rank plus nullity is exact.
Morphism nullspace(const Morphism& a, const ToleranceProfile& tol = default_tol());

// Extends an isometry to a full orthonormal basis and returns the added part.
Morphism orthonormal_complement(const Morphism& iso,
                                const ToleranceProfile& tol = default_tol());

bool is_isometry(const Morphism& f, double tol);
bool is_coisometry(const Morphism& f, double tol);
bool is_unitary_matrix(const Morphism& f, double tol);
bool is_self_adjoint(const Morphism& a, double tol);

struct EigenResult {
  std::vector<double> values;  // ascending; self-adjoint spectra are real in H too
  Morphism vectors;            // unitary, a = vectors * diag(values) * dagger(vectors)
};

// Raw cyclic Jacobi kernel.  Valid over all three rings: the (p,q) rotation
// uses the unit phase of the pivot entry, which is just as available in H.
EigenResult jacobi_hermitian(const Morphism& a, const ToleranceProfile& tol = default_tol());

// Production eigensolver: Jacobi directly over R and C; over H the matrix is
// embedded as a complex one of doubled size, solved there, and the doubled
// eigenpairs are folded back to quaternionic columns.
EigenResult hermitian_eigen(const Morphism& a, const ToleranceProfile& tol = default_tol());

// Spectral square root of a positive semidefinite matrix.  Eigenvalues in
// [-1e-10, 0) are clamped to zero; anything lower is a domain error.  A
// non-self-adjoint input is rejected by the eigensolver underneath.
Morphism sqrt_psd(const Morphism& a, const ToleranceProfile& tol = default_tol());

struct PolarResult {
  Morphism unitary;   // u with q = u * positive
  Morphism positive;  // sqrt_psd(dagger(q) q)
};

// Polar decomposition of an invertible square matrix (smallest singular value
// at least tol.drop, else a domain error).
PolarResult polar(const Morphism& q, const ToleranceProfile& tol = default_tol());

// Largest singular value.
double operator_norm(const Morphism& a, const ToleranceProfile& tol = default_tol());

}  // namespace daghilb
