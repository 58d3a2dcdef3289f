#pragma once

namespace daghilb {

// Single knob set for every numerical decision in the library.  Values are
// absolute residual bounds at the working scale (entries O(1), dims <= 200);
// callers with wilder inputs should scale data, not the profile.
struct ToleranceProfile {
  double orthonormal = 1e-12;  // Gram deviation accepted from freshly built isometries
  double structure   = 1e-10;  // kernel residuals, transition triangles, family Grams, structure ops
  double unitary     = 1e-10;  // unitarity / orthogonality residual of produced factors
  double lattice     = 1e-8;   // subobject equality, order tests, universal factorisations
  double spectral    = 1e-8;   // reconstruction residuals of eigen/sqrt/polar products
  double strict      = 1e-14;  // identities that hold to rounding (induced addition, tensor laws)
  double commutation = 1e-9;   // S*R = R*S guard inside the unitary decomposition
  double drop        = 1e-10;  // relative column-drop threshold in Gram-Schmidt, singularity floor
  double zero_input  = 1e-14;  // below this Frobenius norm an operator counts as zero
  double eigen_off   = 1e-14;  // relative off-diagonal mass at which Jacobi sweeps stop
};

inline const ToleranceProfile& default_tol() {
  static const ToleranceProfile t{};
  return t;
}

}  // namespace daghilb
