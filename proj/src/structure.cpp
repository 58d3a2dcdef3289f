#include "daghilb/structure.hpp"

#include <stdexcept>
#include <string>

#include "daghilb/factor.hpp"

namespace daghilb {

RealInnerSpace RealInnerSpace::standard(int dim) {
  RealInnerSpace v;
  v.dim = dim;
  v.gram = Morphism::identity(FieldTag::R, dim);
  return v;
}

namespace {

void require_real_square(const Morphism& m, int dim, const char* what) {
  if (m.field() != FieldTag::R)
    throw std::invalid_argument(std::string(what) + " must be a real matrix");
  if (m.rows() != dim || m.cols() != dim)
    throw std::invalid_argument(std::string(what) + " must be " + std::to_string(dim) + "x" +
                                std::to_string(dim));
}

void check_identity(const Morphism& lhs, const Morphism& rhs, double tol, const char* label) {
  const double res = distance(lhs, rhs);
  if (res > tol)
    throw std::invalid_argument(std::string("structure operator identity ") + label +
                                " violated (residual " + std::to_string(res) + ")");
}

// Adjoint with respect to the gram form: G^-1 A^T G.  With the identity gram
// this is the plain transpose; general grams invert through the eigensolver.
Morphism form_adjoint(const Morphism& a, const RealInnerSpace& v,
                      const ToleranceProfile& tol) {
  const Morphism at = dagger(a);
  bool gram_is_identity = true;
  const Morphism id = Morphism::identity(FieldTag::R, v.dim);
  if (distance(v.gram, id) != 0.0) gram_is_identity = false;
  if (gram_is_identity) return at;
  const EigenResult eig = hermitian_eigen(v.gram, tol);
  for (double lambda : eig.values)
    if (lambda <= tol.drop)
      throw std::invalid_argument("gram form is not positive definite");
  std::vector<double> invs(eig.values.size());
  for (std::size_t i = 0; i < invs.size(); ++i) invs[i] = 1.0 / eig.values[i];
  Morphism d(FieldTag::R, v.dim, v.dim);
  for (int i = 0; i < v.dim; ++i) d.at(i, i) = Scalar::real(invs[static_cast<std::size_t>(i)]);
  const Morphism gram_inv = eig.vectors * d * dagger(eig.vectors);
  return gram_inv * at * v.gram;
}

void validate_structure(const RealInnerSpace& v, const Morphism& s,
                        const Morphism* t, const ToleranceProfile& tol) {
  const Morphism id = Morphism::identity(FieldTag::R, v.dim);
  require_real_square(v.gram, v.dim, "gram form");
  check_identity(v.gram, dagger(v.gram), tol.structure, "[.,.] symmetric");
  require_real_square(s, v.dim, "s");
  check_identity(s * s, -id, tol.structure, "s^2 = -1");
  check_identity(form_adjoint(s, v, tol), -s, tol.structure, "s^dag = -s");
  if (t != nullptr) {
    require_real_square(*t, v.dim, "t");
    check_identity(*t * *t, -id, tol.structure, "t^2 = -1");
    check_identity(form_adjoint(*t, v, tol), -*t, tol.structure, "t^dag = -t");
    check_identity(s * *t, -(*t * s), tol.structure, "s t = -t s");
  }
}

}  // namespace

double PromotedSpace::real_inner(const Morphism& u, const Morphism& v) const {
  if (!u.is_vector() || !v.is_vector() || u.rows() != space_.dim || v.rows() != space_.dim)
    throw std::invalid_argument("promoted form expects real vectors of the space dimension");
  const Morphism p = dagger(v) * space_.gram * u;
  return p.at(0, 0).w;
}

Scalar PromotedSpace::inner(const Morphism& u, const Morphism& v) const {
  const double re = real_inner(u, v);
  const double ci = -real_inner(s_ * u, v);
  if (field_ == FieldTag::C) return Scalar::complex_val(re, ci);
  const Morphism& t = *t_;
  const double cj = -real_inner(t * u, v);
  const double ck = -real_inner(t * (s_ * u), v);
  return Scalar::quaternion(re, ci, cj, ck);
}

Morphism PromotedSpace::act(const Morphism& u, const Scalar& lambda) const {
  const Scalar l = promote(lambda, field_);
  Morphism out = u.scaled(l.w) + (s_ * u).scaled(l.x);
  if (field_ == FieldTag::H) {
    const Morphism& t = *t_;
    out = out + (t * u).scaled(l.y) + (t * (s_ * u)).scaled(l.z);
  }
  return out;
}

PromotedSpace promote_complex(const RealInnerSpace& v, const StructureOps& ops,
                              const ToleranceProfile& tol) {
  if (v.dim % 2 != 0)
    throw std::invalid_argument("complex promotion needs even real dimension");
  validate_structure(v, ops.s, nullptr, tol);
  return PromotedSpace(FieldTag::C, v, ops.s, std::nullopt);
}

PromotedSpace promote_quaternionic(const RealInnerSpace& v, const StructureOps& ops,
                                   const ToleranceProfile& tol) {
  if (v.dim % 4 != 0)
    throw std::invalid_argument("quaternionic promotion needs real dimension divisible by 4");
  if (!ops.t.has_value())
    throw std::invalid_argument("quaternionic promotion needs both structure operators");
  validate_structure(v, ops.s, &*ops.t, tol);
  return PromotedSpace(FieldTag::H, v, ops.s, ops.t);
}

}  // namespace daghilb
