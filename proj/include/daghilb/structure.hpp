#pragma once
// Recovering a complex or quaternionic inner product from a real one plus
// anti-self-adjoint structure operators.  Given s (and t) on a real inner
// product space V with s^2 = -1 (and t^2 = -1, st = -ts, both skew-adjoint),
// V becomes a module over C (or H) with v.i := s v, v.j := t v, v.k := t s v,
// and the promoted form is
//
//   <u, v>_C = [u, v] - [s u, v] i
//   <u, v>_H = [u, v] - [s u, v] i - [t u, v] j - [t s u, v] k
//
// which is right-linear in its first slot over the promoted ring.

#include <optional>

#include "daghilb/matrix.hpp"

namespace daghilb {

struct RealInnerSpace {
  int dim{0};
  Morphism gram;  // symmetric positive definite; identity by default

  static RealInnerSpace standard(int dim);
};

struct StructureOps {
  Morphism s;
  std::optional<Morphism> t;
};

class PromotedSpace {
 public:
  FieldTag field() const { return field_; }
  int real_dim() const { return space_.dim; }

  // The promoted form on real coordinate vectors.
  Scalar inner(const Morphism& u, const Morphism& v) const;
  // Right action of a promoted scalar on a real vector: u.lambda.
  Morphism act(const Morphism& u, const Scalar& lambda) const;
  // The real form [u, v].
  double real_inner(const Morphism& u, const Morphism& v) const;

 private:
  friend PromotedSpace promote_complex(const RealInnerSpace&, const StructureOps&,
                                       const ToleranceProfile&);
  friend PromotedSpace promote_quaternionic(const RealInnerSpace&, const StructureOps&,
                                            const ToleranceProfile&);
  PromotedSpace(FieldTag f, RealInnerSpace space, Morphism s, std::optional<Morphism> t)
      : field_(f), space_(std::move(space)), s_(std::move(s)), t_(std::move(t)) {}

  FieldTag field_;
  RealInnerSpace space_;
  Morphism s_;
  std::optional<Morphism> t_;
};

// Validation is eager and the thrown message names the identity that failed.
// promote_complex needs dim divisible by 2, promote_quaternionic by 4.
PromotedSpace promote_complex(const RealInnerSpace& v, const StructureOps& ops,
                              const ToleranceProfile& tol = default_tol());
PromotedSpace promote_quaternionic(const RealInnerSpace& v, const StructureOps& ops,
                                   const ToleranceProfile& tol = default_tol());

}  // namespace daghilb
