#include "daghilb/unidecomp.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "daghilb/embed.hpp"

namespace daghilb {

Morphism UnitaryDecomposition::reconstruct() const {
  Morphism sum(field, rows, cols);
  for (const DecompositionTerm& t : terms) sum = sum + t.factor.scaled_left(t.coeff);
  return sum;
}

double UnitaryDecomposition::worst_factor_unitarity() const {
  double worst = 0.0;
  for (const DecompositionTerm& t : terms) {
    const Morphism g = dagger(t.factor) * t.factor;
    worst = std::max(worst, distance(g, Morphism::identity(field, t.factor.cols())));
  }
  return worst;
}

namespace {

void require_square(const Morphism& t) {
  if (t.rows() != t.cols())
    throw std::invalid_argument("unitary decomposition needs a square matrix");
}

void record_reconstruction(UnitaryDecomposition& dec, const Morphism& t) {
  dec.note("reconstruction", distance(dec.reconstruct(), t));
}

// max over the right actions of i and j of |realify(F) R - R realify(F)|;
// zero exactly when the real map F commutes with the module structure.
double h_linearity_residual(const Morphism& f) {
  const Morphism rf = realify(f);
  double worst = 0.0;
  for (int axis : {1, 2}) {
    const Morphism r = right_mult_matrix(FieldTag::H, f.cols(), Scalar::unit(FieldTag::H, axis));
    worst = std::max(worst, distance(rf * r, r * rf));
  }
  return worst;
}

UnitaryDecomposition decompose_polar_route(const Morphism& t, bool pad, FieldTag expect,
                                           const ToleranceProfile& tol);

// Shared even-dimension pipeline for R and H.
UnitaryDecomposition polar_route_even(const Morphism& t, const ToleranceProfile& tol) {
  const FieldTag k = t.field();
  const int n = t.rows(), m = n / 2;

  UnitaryDecomposition dec;
  dec.field = k;
  dec.rows = n;
  dec.cols = n;
  dec.source_norm = operator_norm(t, tol);

  const Morphism id = Morphism::identity(k, n);
  const double nu = dec.source_norm;
  const Morphism that = t.scaled(1.0 / (2.0 * nu));  // |that| = 1/2, so 1 - that is invertible
  const PolarResult pol = polar(id - that, tol);
  dec.note("polar-unitary", distance(dagger(pol.unitary) * pol.unitary, id));
  dec.note("polar-reconstruction", distance(pol.unitary * pol.positive, id - that));

  const EigenResult eig = hermitian_eigen(pol.positive, tol);  // ascending, in [1/2, 3/2]
  {
    Morphism lam(k, n, n);
    for (int i = 0; i < n; ++i) lam.at(i, i) = Scalar::real(eig.values[static_cast<std::size_t>(i)], k);
    dec.note("spectral-split", distance(eig.vectors * lam * dagger(eig.vectors), pol.positive));
  }

  dec.terms.push_back({Scalar::real(2.0 * nu, k), id});

  // In eigencoordinates S = diag(S1, S2); with A = (S1+S2)/2, B = (S1-S2)/2,
  // diag(A, A) resolves into two rotations and diag(B, -B) into two
  // reflections once each is scaled to norm at most one.
  struct HalfSplit {
    std::vector<double> entries;
    bool rotation;  // rotation blocks for A, reflection blocks for B
    const char* label;
  };
  std::vector<HalfSplit> parts(2);
  parts[0].rotation = true;
  parts[0].label = "sym-part";
  parts[1].rotation = false;
  parts[1].label = "skew-part";
  parts[0].entries.resize(static_cast<std::size_t>(m));
  parts[1].entries.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const double lo = eig.values[static_cast<std::size_t>(i)];
    const double hi = eig.values[static_cast<std::size_t>(m + i)];
    parts[0].entries[static_cast<std::size_t>(i)] = (lo + hi) / 2.0;
    parts[1].entries[static_cast<std::size_t>(i)] = (lo - hi) / 2.0;
  }

  for (const HalfSplit& part : parts) {
    double scale_max = 0.0;
    for (double v : part.entries) scale_max = std::max(scale_max, std::abs(v));
    if (scale_max <= 1e-13) {
      dec.note(std::string(part.label) + "-vanished", scale_max);
      continue;
    }
    Morphism d(k, m, m), c(k, m, m);
    for (int i = 0; i < m; ++i) {
      const double v = part.entries[static_cast<std::size_t>(i)] / scale_max;
      d.at(i, i) = Scalar::real(v, k);
      c.at(i, i) = Scalar::real(std::sqrt(std::max(0.0, 1.0 - v * v)), k);
    }
    for (int sign : {+1, -1}) {
      Morphism blk(k, n, n);
      blk.set_block(0, 0, d);
      blk.set_block(0, m, sign > 0 ? c : -c);
      if (part.rotation) {
        blk.set_block(m, 0, sign > 0 ? -c : c);
        blk.set_block(m, m, d);
      } else {
        blk.set_block(m, 0, sign > 0 ? c : -c);
        blk.set_block(m, m, -d);
      }
      const Morphism factor = pol.unitary * (eig.vectors * blk * dagger(eig.vectors));
      dec.note(std::string(part.label) + "-factor-unitarity",
               distance(dagger(factor) * factor, id));
      if (k == FieldTag::H)
        dec.note(std::string(part.label) + "-factor-H-linearity", h_linearity_residual(factor));
      dec.terms.push_back({Scalar::real(-2.0 * nu * scale_max / 2.0, k), factor});
    }
  }

  record_reconstruction(dec, t);
  return dec;
}

UnitaryDecomposition decompose_polar_route(const Morphism& t, bool pad, FieldTag expect,
                                           const ToleranceProfile& tol) {
  if (t.field() != expect)
    throw std::invalid_argument(std::string("expected a matrix over ") + field_name(expect));
  require_square(t);
  if (is_zero(t, tol.zero_input))
    throw std::domain_error("cannot decompose the zero operator into unitaries");

  if (is_unitary_matrix(t, tol.unitary)) {
    UnitaryDecomposition dec;
    dec.field = t.field();
    dec.rows = t.rows();
    dec.cols = t.cols();
    dec.source_norm = operator_norm(t, tol);
    dec.terms.push_back({Scalar::one(t.field()), t});
    dec.note("unitary-fast-path", distance(dagger(t) * t, Morphism::identity(t.field(), t.cols())));
    record_reconstruction(dec, t);
    return dec;
  }

  if (t.rows() % 2 != 0) {
    if (!pad)
      throw std::domain_error("odd dimension " + std::to_string(t.rows()) +
                              ": the split into spectral halves needs an even size "
                              "(padding is available but opt-in)");
    const Morphism padded = direct_sum(t, Morphism(t.field(), 1, 1));
    UnitaryDecomposition inner = polar_route_even(padded, tol);
    UnitaryDecomposition dec;
    dec.field = t.field();
    dec.rows = t.rows();
    dec.cols = t.cols();
    dec.source_norm = inner.source_norm;
    dec.padded = true;
    dec.diagnostics = inner.diagnostics;
    for (const DecompositionTerm& term : inner.terms) {
      const Morphism trimmed = term.factor.submatrix(0, 0, t.rows(), t.cols());
      // The trimmed factor is orthogonal only up to its coupling with the pad
      // coordinate; say so out loud rather than pretend.
      dec.note("trimmed-factor-unitarity-loss",
               distance(dagger(trimmed) * trimmed, Morphism::identity(t.field(), t.cols())));
      dec.terms.push_back({term.coeff, trimmed});
    }
    record_reconstruction(dec, t);
    return dec;
  }

  return polar_route_even(t, tol);
}

}  // namespace

UnitaryDecomposition decompose_complex(const Morphism& t, const ToleranceProfile& tol,
                                       bool emit_vanishing_parts) {
  if (t.field() != FieldTag::C)
    throw std::invalid_argument("decompose_complex expects a complex matrix");
  require_square(t);

  UnitaryDecomposition dec;
  dec.field = FieldTag::C;
  dec.rows = t.rows();
  dec.cols = t.cols();

  if (is_zero(t, tol.zero_input)) {
    dec.note("zero-input", frobenius_norm(t));
    return dec;  // empty sum
  }
  dec.source_norm = operator_norm(t, tol);

  const Morphism id = Morphism::identity(FieldTag::C, t.rows());
  if (is_unitary_matrix(t, tol.unitary)) {
    dec.terms.push_back({Scalar::one(FieldTag::C), t});
    dec.note("unitary-fast-path", distance(dagger(t) * t, id));
    record_reconstruction(dec, t);
    return dec;
  }

  const Scalar iu = Scalar::complex_val(0.0, 1.0);
  struct Part {
    Morphism sym;  // self-adjoint S'
    Scalar weight;
    const char* label;
  };
  // T = 1/2 (T + T^dag) + (-i/2) (i T - i T^dag), both brackets self-adjoint.
  const std::vector<Part> parts = {
      {t + dagger(t), Scalar::complex_val(0.5, 0.0), "sym-part"},
      {t.scaled_left(iu) - dagger(t).scaled_left(iu), Scalar::complex_val(0.0, -0.5),
       "antisym-part"},
  };

  for (const Part& part : parts) {
    const double nu = operator_norm(part.sym, tol);
    if (nu <= tol.zero_input * std::max(1.0, frobenius_norm(t))) {
      if (emit_vanishing_parts) {
        // Keep the four-term shape: the vanished part contributes +-i with
        // zero weight (S = 0 forces R = 1).
        dec.terms.push_back({Scalar::zero(FieldTag::C), id.scaled_left(iu)});
        dec.terms.push_back({Scalar::zero(FieldTag::C), id.scaled_left(neg(iu))});
        dec.note(std::string(part.label) + "-vanished-kept", nu);
      } else {
        dec.note(std::string(part.label) + "-vanished-skipped", nu);
      }
      continue;
    }
    const Morphism s = part.sym.scaled(1.0 / (2.0 * nu));  // |s| = 1/2
    const Morphism r = sqrt_psd(id - s * s, tol);
    const double comm = distance(s * r, r * s);
    dec.note(std::string(part.label) + "-sqrt-commutation", comm);
    if (comm > tol.commutation)
      throw std::runtime_error("square root failed to commute with its argument (residual " +
                               std::to_string(comm) + ")");
    const Scalar coeff = mul(part.weight, Scalar::complex_val(nu, 0.0));
    for (int sign : {+1, -1}) {
      const Morphism factor = sign > 0 ? s + r.scaled_left(iu) : s - r.scaled_left(iu);
      dec.note(std::string(part.label) + "-factor-unitarity",
               distance(dagger(factor) * factor, id));
      dec.terms.push_back({coeff, factor});
    }
  }

  record_reconstruction(dec, t);
  return dec;
}

UnitaryDecomposition decompose_real(const Morphism& t, bool pad, const ToleranceProfile& tol) {
  return decompose_polar_route(t, pad, FieldTag::R, tol);
}

UnitaryDecomposition decompose_quaternionic(const Morphism& t, bool pad,
                                            const ToleranceProfile& tol) {
  return decompose_polar_route(t, pad, FieldTag::H, tol);
}

UnitaryDecomposition decompose(const Morphism& t, bool pad, const ToleranceProfile& tol) {
  switch (t.field()) {
    case FieldTag::R: return decompose_real(t, pad, tol);
    case FieldTag::C: return decompose_complex(t, tol);
    default: return decompose_quaternionic(t, pad, tol);
  }
}

}  // namespace daghilb
