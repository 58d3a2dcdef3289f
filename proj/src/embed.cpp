#include "daghilb/embed.hpp"

#include <stdexcept>
#include <string>

namespace daghilb {

Morphism embed_complex(const Morphism& a) {
  if (a.field() != FieldTag::H)
    throw std::invalid_argument("embed_complex expects a quaternionic matrix");
  const int n = a.rows(), m = a.cols();
  Morphism e(FieldTag::C, 2 * n, 2 * m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      const Scalar& q = a.at(i, j);
      // q = (w + x i) + (y + z i) j
      e.at(i, j) = Scalar::complex_val(q.w, q.x);
      e.at(i, j + m) = Scalar::complex_val(q.y, q.z);
      e.at(i + n, j) = Scalar::complex_val(-q.y, q.z);
      e.at(i + n, j + m) = Scalar::complex_val(q.w, -q.x);
    }
  return e;
}

Morphism unembed_complex(const Morphism& e, double sym_tol) {
  if (e.field() != FieldTag::C)
    throw std::invalid_argument("unembed_complex expects a complex matrix");
  if (e.rows() % 2 != 0 || e.cols() % 2 != 0)
    throw std::invalid_argument("unembed_complex expects even dimensions");
  const int n = e.rows() / 2, m = e.cols() / 2;
  double worst = 0.0;
  Morphism a(FieldTag::H, n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      const Scalar& a1 = e.at(i, j);
      const Scalar& a2 = e.at(i, j + m);
      const Scalar& b1 = e.at(i + n, j);
      const Scalar& b2 = e.at(i + n, j + m);
      worst = std::max(worst, norm(add(b1, conj(a2))));  // b1 = -conj(a2)
      worst = std::max(worst, norm(sub(b2, conj(a1))));  // b2 =  conj(a1)
      a.at(i, j) = Scalar::quaternion(a1.w, a1.x, a2.w, a2.x);
    }
  if (worst > sym_tol)
    throw std::invalid_argument(
        "matrix is not in the image of the quaternionic embedding (block symmetry off by " +
        std::to_string(worst) + ")");
  return a;
}

namespace {
// d x d real block of w |-> a * w (left) or w |-> w * a (right) on the
// coordinates of one slot in the basis 1, i, j, k truncated to the field.
Morphism mult_block(const Scalar& a, bool left) {
  const int d = field_arity(a.field);
  Morphism blk(FieldTag::R, d, d);
  for (int col = 0; col < d; ++col) {
    const Scalar b = Scalar::unit(a.field, col);
    const Scalar prod = left ? mul(a, b) : mul(b, a);
    const double comps[4] = {prod.w, prod.x, prod.y, prod.z};
    for (int row = 0; row < d; ++row) blk.at(row, col) = Scalar::real(comps[row]);
  }
  return blk;
}
}  // namespace

Morphism realify(const Morphism& a) {
  const int d = field_arity(a.field());
  Morphism r(FieldTag::R, d * a.rows(), d * a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      r.set_block(d * i, d * j, mult_block(a.at(i, j), /*left=*/true));
  return r;
}

Morphism right_mult_matrix(FieldTag f, int n, const Scalar& lambda) {
  const Scalar l = promote(lambda, f);
  const int d = field_arity(f);
  Morphism r(FieldTag::R, d * n, d * n);
  const Morphism blk = mult_block(l, /*left=*/false);
  for (int i = 0; i < n; ++i) r.set_block(d * i, d * i, blk);
  return r;
}

}  // namespace daghilb
