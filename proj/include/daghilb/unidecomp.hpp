#pragma once
// Short weighted sums of unitaries.  Any square complex matrix splits into at
// most four unitary terms: take the self-adjoint and anti-self-adjoint parts,
// rescale each S' to S = S'/(2 |S'|) so that R = sqrt(1 - S^2) exists, and use
// S' = |S'| (S + iR) + |S'| (S - iR).  Over R and H, where that trick has no i
// available on the matrix side (or needs care with noncommuting scalars), a
// polar route is used instead: with T rescaled so |T| = 1/2, Q = 1 - T is
// invertible, Q = U S with S positive; splitting the spectrum of S into two
// halves A +/- B of norm at most 1 turns S into four rotations/reflections,
// giving at most five unitary terms including the leading identity.

#include <string>
#include <utility>
#include <vector>

#include "daghilb/factor.hpp"

namespace daghilb {

struct DecompositionTerm {
  Scalar coeff;
  Morphism factor;
};

struct UnitaryDecomposition {
  FieldTag field{FieldTag::R};
  int rows{0}, cols{0};
  std::vector<DecompositionTerm> terms;
  double source_norm{0.0};  // operator norm of the input
  bool padded{false};       // odd dimension handled by a zero pad, factors trimmed
  // (label, residual) pairs recorded at each pipeline step
  std::vector<std::pair<std::string, double>> diagnostics;

  Morphism reconstruct() const;
  double worst_factor_unitarity() const;  // max over terms of |F^dag F - I|
  void note(const std::string& label, double residual) {
    diagnostics.emplace_back(label, residual);
  }
};

// Complex case, at most 4 terms.  The zero matrix yields an empty term list;
// a unitary input returns itself as the single term.  When
// `emit_vanishing_parts` is set, a vanished self- or anti-self-adjoint part
// still contributes its two factors with zero coefficients, keeping the
// four-term shape uniform.
UnitaryDecomposition decompose_complex(const Morphism& t,
                                       const ToleranceProfile& tol = default_tol(),
                                       bool emit_vanishing_parts = false);

// Real case, at most 5 terms.  Odd dimensions are rejected unless `pad` is
// set, in which case the input is padded with a zero row and column and the
// factors are trimmed back afterwards -- the trimmed factors lose exact
// orthogonality and the loss is recorded per factor in the diagnostics.
UnitaryDecomposition decompose_real(const Morphism& t, bool pad = false,
                                    const ToleranceProfile& tol = default_tol());

// Quaternionic case, same shape as the real one; every factor is a genuine
// quaternionic matrix, hence H-linear, and the realified commutation residual
// with the right scalar action is recorded per factor.
UnitaryDecomposition decompose_quaternionic(const Morphism& t, bool pad = false,
                                            const ToleranceProfile& tol = default_tol());

// Field dispatch.
UnitaryDecomposition decompose(const Morphism& t, bool pad = false,
                               const ToleranceProfile& tol = default_tol());

}  // namespace daghilb
