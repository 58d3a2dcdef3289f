#include "daghilb/dagcat.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "daghilb/rng.hpp"

namespace daghilb {

FdObject::FdObject(FieldTag f, int d) : field(f), dim(d) {
  if (d < 0) throw std::invalid_argument("negative dimension");
}

std::string FdObject::describe() const {
  return std::string(field_name(field)) + "^" + std::to_string(dim);
}

Biproduct biproduct(const FdObject& a, const FdObject& b) {
  if (a.field != b.field)
    throw std::invalid_argument("biproduct of objects over different fields");
  Biproduct bp;
  bp.left = a;
  bp.right = b;
  bp.total = FdObject(a.field, a.dim + b.dim);
  bp.p = Morphism(a.field, a.dim, bp.total.dim);
  bp.q = Morphism(a.field, b.dim, bp.total.dim);
  bp.p.set_block(0, 0, Morphism::identity(a.field, a.dim));
  bp.q.set_block(0, a.dim, Morphism::identity(a.field, b.dim));
  bp.i = dagger(bp.p);
  bp.j = dagger(bp.q);
  return bp;
}

Morphism diagonal(FieldTag f, int dim) {
  const Morphism id = Morphism::identity(f, dim);
  return vstack(id, id);
}

Morphism codiagonal(FieldTag f, int dim) {
  const Morphism id = Morphism::identity(f, dim);
  return hstack(id, id);
}

Morphism add_via_biproduct(const Morphism& f, const Morphism& g) {
  if (f.field() != g.field() || f.rows() != g.rows() || f.cols() != g.cols())
    throw std::invalid_argument("summands must be parallel morphisms");
  return codiagonal(f.field(), f.rows()) * direct_sum(f, g) * diagonal(f.field(), f.cols());
}

Morphism equalizer(const Morphism& f, const Morphism& g, const ToleranceProfile& tol) {
  if (f.field() != g.field() || f.rows() != g.rows() || f.cols() != g.cols())
    throw std::invalid_argument("equalizer needs a parallel pair");
  const Morphism d = f - g;
  // A difference below the rank-resolution scale of the pair is cancellation
  // noise: the maps are equal and everything equalizes them.  Without this,
  // the noise columns would masquerade as a full-rank difference.
  const double scale = std::max({1.0, frobenius_norm(f), frobenius_norm(g)});
  if (frobenius_norm(d) <= tol.drop * scale)
    return Morphism::identity(f.field(), f.cols());
  return nullspace(d, tol);
}

Morphism kernel(const Morphism& f, const ToleranceProfile& tol) {
  return equalizer(f, Morphism(f.field(), f.rows(), f.cols()), tol);
}

std::pair<Morphism, Morphism> cokernel_pair(const Morphism& f, const ToleranceProfile& tol) {
  // Codomain B splits as im(f) (+) im(f)^perp; the pushout of f with itself
  // is B (+) im(f)^perp, gluing the two copies of B along the image.
  const Morphism m = range_basis(f, tol);
  const Morphism mperp = orthonormal_complement(m, tol);
  const int nb = f.rows(), extra = mperp.cols();
  const FieldTag k = f.field();

  Morphism f1(k, nb + extra, nb);
  f1.set_block(0, 0, Morphism::identity(k, nb));

  Morphism f2(k, nb + extra, nb);
  f2.set_block(0, 0, m * dagger(m));  // image part lands in the shared copy
  f2.set_block(nb, 0, dagger(mperp));  // complement goes to the fresh summand
  return {f1, f2};
}

Factorization factorize(const Morphism& f, const ToleranceProfile& tol) {
  Factorization out;
  out.m = range_basis(f, tol);
  out.e = dagger(out.m) * f;
  return out;
}

bool is_dagger_mono(const Morphism& f, double tol) { return is_isometry(f, tol); }

bool is_dagger_epi(const Morphism& f, double tol) { return is_coisometry(f, tol); }

bool is_unitary(const Morphism& f, double tol) { return is_unitary_matrix(f, tol); }

bool is_mono(const Morphism& f, const ToleranceProfile& tol) {
  return kernel(f, tol).cols() == 0;
}

bool is_epi(const Morphism& f, const ToleranceProfile& tol) {
  return range_basis(f, tol).cols() == f.rows();
}

namespace {

Morphism random_matrix(Rng& rng, FieldTag f, int rows, int cols) {
  Morphism m(f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rng.scalar(f);
  return m;
}

}  // namespace

Report verify_scalar_field(FieldTag f, int trials, std::uint64_t seed,
                           const ToleranceProfile& tol) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  Report report;

  {
    // Two-sided inverses of sampled nonzero scalars, relative residual.
    CheckResult c;
    c.check = std::string("scalars.") + field_name(f) + ".multiplicative-inverse";
    c.statement_ref = "scalars.division-ring";
    Rng rng = stream(seed, c.check);
    for (int t = 0; t < trials; ++t) {
      const Scalar a = rng.nonzero_scalar(f);
      const Scalar b = inv(a);
      const Scalar one = Scalar::one(f);
      const double res =
          std::max(norm(sub(mul(a, b), one)), norm(sub(mul(b, a), one))) / norm(a);
      c.trial(res, 1e-12, seed, "inverse of sampled scalar");
    }
    report.add(c);
  }

  {
    // ker(nabla: K (+) K -> K) is a line whose two components cancel: the
    // additive inverse of 1 exists inside the category.
    CheckResult c;
    c.check = std::string("scalars.") + field_name(f) + ".additive-inverse-witness";
    c.statement_ref = "scalars.division-ring";
    const Morphism nabla = codiagonal(f, 1);
    const Morphism ker = kernel(nabla, tol);
    c.trials = 1;
    c.require(ker.cols() == 1, seed,
              "kernel of the codiagonal on K(+)K should be a line, got " +
                  std::to_string(ker.cols()) + " columns");
    if (ker.cols() == 1) {
      const Scalar a = ker.at(0, 0), b = ker.at(1, 0);
      c.require(norm(a) > 0.1 && norm(b) > 0.1, seed, "kernel components should be nonzero");
      if (norm(a) > 0.0) {
        const Scalar ratio = mul(b, inv(a));
        const double res = norm(add(ratio, Scalar::one(f)));  // ratio = -1
        c.observe(res);
        c.require(res <= 1e-12, seed,
                  "component ratio should be -1, off by " + std::to_string(res));
      }
    }
    report.add(c);
  }

  {
    // Simplicity of the generator: every dagger subobject of K is 0 or K.
    CheckResult c;
    c.check = std::string("scalars.") + field_name(f) + ".generator-simple";
    c.statement_ref = "scalars.simple-generator";
    Rng rng = stream(seed, c.check);
    for (int t = 0; t < trials; ++t) {
      const int cols = rng.uniform_int(0, 3);
      const Morphism span = random_matrix(rng, f, 1, cols);
      const Morphism sub = range_basis(span, tol);
      ++c.trials;
      c.require(sub.cols() == 0 || sub.cols() == 1, seed,
                "subobject of K with rank " + std::to_string(sub.cols()));
      if (sub.cols() == 1) {
        const double res = distance(dagger(sub) * sub, Morphism::identity(f, 1));
        c.observe(res);
        c.require(res <= tol.orthonormal, seed, "rank-1 subobject of K is not unitary");
      }
    }
    report.add(c);
  }

  return report;
}

}  // namespace daghilb
