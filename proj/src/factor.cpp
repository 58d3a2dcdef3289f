#include "daghilb/factor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "daghilb/embed.hpp"

namespace daghilb {

IsometryResult gram_schmidt(const Morphism& m, const ToleranceProfile& tol) {
  const int n = m.rows();
  std::vector<Morphism> kept;
  kept.reserve(static_cast<std::size_t>(m.cols()));
  for (int j = 0; j < m.cols(); ++j) {
    Morphism v = m.column(j);
    const double input_norm = frobenius_norm(v);
    if (input_norm == 0.0) continue;
    // Two projection passes; the second mops up the cancellation the first
    // leaves behind when a column is nearly dependent.
    for (int pass = 0; pass < 2; ++pass)
      for (const Morphism& q : kept) {
        const Scalar c = inner(v, q);  // dagger(q) v
        v = v - q.scaled_right(c);
      }
    const double r = frobenius_norm(v);
    if (r > tol.drop * input_norm) kept.push_back(v.scaled(1.0 / r));
  }
  IsometryResult out;
  out.rank = static_cast<int>(kept.size());
  out.iso = Morphism(m.field(), n, out.rank);
  for (int j = 0; j < out.rank; ++j) out.iso.set_column(j, kept[static_cast<std::size_t>(j)]);
  return out;
}

Morphism range_basis(const Morphism& a, const ToleranceProfile& tol) {
  return gram_schmidt(a, tol).iso;
}

Morphism orthonormal_complement(const Morphism& iso, const ToleranceProfile& tol) {
  const int n = iso.rows();
  const Morphism full = gram_schmidt(hstack(iso, Morphism::identity(iso.field(), n)), tol).iso;
  if (full.cols() != n)
    throw std::runtime_error("orthonormal completion produced a defective basis");
  return full.submatrix(0, iso.cols(), n, n - iso.cols());
}

Morphism nullspace(const Morphism& a, const ToleranceProfile& tol) {
  const int n = a.cols();
  const Morphism q = range_basis(a, tol);  // rank decided once, here
  const int r = q.cols();
  // a = q e with e of full row rank r, so ker a = ker e = (range of e†)^perp.
  const Morphism e = dagger(q) * a;
  const Morphism full =
      gram_schmidt(hstack(dagger(e), Morphism::identity(a.field(), n)), tol).iso;
  if (full.cols() != n)
    throw std::runtime_error("nullspace completion produced a defective basis");
  // Exactly n - r trailing columns, keeping rank + nullity = cols on the nose.
  return full.submatrix(0, r, n, n - r);
}

bool is_isometry(const Morphism& f, double tol) {
  return distance(dagger(f) * f, Morphism::identity(f.field(), f.cols())) <= tol;
}

bool is_coisometry(const Morphism& f, double tol) {
  return distance(f * dagger(f), Morphism::identity(f.field(), f.rows())) <= tol;
}

bool is_unitary_matrix(const Morphism& f, double tol) {
  return f.rows() == f.cols() && is_isometry(f, tol) && is_coisometry(f, tol);
}

bool is_self_adjoint(const Morphism& a, double tol) {
  return a.rows() == a.cols() && distance(a, dagger(a)) <= tol;
}

namespace {

double off_diagonal_norm(const Morphism& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) s += norm_sq(a.at(i, j));
  return std::sqrt(s);
}

void sort_eigen(EigenResult& eig) {
  const int n = static_cast<int>(eig.values.size());
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int p, int q) {
    return eig.values[static_cast<std::size_t>(p)] < eig.values[static_cast<std::size_t>(q)];
  });
  std::vector<double> vals(static_cast<std::size_t>(n));
  Morphism vecs(eig.vectors.field(), n, n);
  for (int j = 0; j < n; ++j) {
    vals[static_cast<std::size_t>(j)] = eig.values[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])];
    vecs.set_column(j, eig.vectors.column(order[static_cast<std::size_t>(j)]));
  }
  eig.values = std::move(vals);
  eig.vectors = std::move(vecs);
}

}  // namespace

EigenResult jacobi_hermitian(const Morphism& a, const ToleranceProfile& tol) {
  if (a.rows() != a.cols()) throw std::invalid_argument("eigensolver needs a square matrix");
  const double mag = std::max(1.0, frobenius_norm(a));
  if (!is_self_adjoint(a, 1e-8 * mag))
    throw std::invalid_argument("eigensolver needs a self-adjoint matrix");

  const int n = a.rows();
  Morphism work = (a + dagger(a)).scaled(0.5);  // exact symmetrisation
  Morphism v = Morphism::identity(a.field(), n);

  const double target = tol.eigen_off * mag;
  const int max_sweeps = 128;
  int sweep = 0;
  for (; sweep < max_sweeps && off_diagonal_norm(work) > target; ++sweep) {
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const Scalar pivot = work.at(p, q);
        const double g = norm(pivot);
        if (g <= 1e-300) {
          work.at(p, q) = Scalar::zero(a.field());
          work.at(q, p) = Scalar::zero(a.field());
          continue;
        }
        const Scalar u = scale(pivot, 1.0 / g);
        const double alpha = work.at(p, p).w;
        const double beta = work.at(q, q).w;
        const double tau = (beta - alpha) / (2.0 * g);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // Plane rotation G: G(p,p)=c, G(p,q)=s u, G(q,p)=-s conj(u), G(q,q)=c.
        const Scalar su = scale(u, s);
        const Scalar scu = scale(conj(u), s);
        // work <- work * G (columns p, q; coefficients act on the right)
        for (int k = 0; k < n; ++k) {
          const Scalar wp = work.at(k, p), wq = work.at(k, q);
          work.at(k, p) = sub(scale(wp, c), mul(wq, scu));
          work.at(k, q) = add(mul(wp, su), scale(wq, c));
        }
        // work <- dagger(G) * work (rows p, q; coefficients act on the left)
        for (int k = 0; k < n; ++k) {
          const Scalar wp = work.at(p, k), wq = work.at(q, k);
          work.at(p, k) = sub(scale(wp, c), mul(su, wq));
          work.at(q, k) = add(mul(scu, wp), scale(wq, c));
        }
        // v <- v * G
        for (int k = 0; k < n; ++k) {
          const Scalar vp = v.at(k, p), vq = v.at(k, q);
          v.at(k, p) = sub(scale(vp, c), mul(vq, scu));
          v.at(k, q) = add(mul(vp, su), scale(vq, c));
        }
        work.at(p, q) = Scalar::zero(a.field());
        work.at(q, p) = Scalar::zero(a.field());
        work.at(p, p) = Scalar::real(work.at(p, p).w, a.field());
        work.at(q, q) = Scalar::real(work.at(q, q).w, a.field());
      }
  }
  if (off_diagonal_norm(work) > std::max(target, 1e-10 * mag))
    throw std::runtime_error("Jacobi iteration failed to converge after " +
                             std::to_string(sweep) + " sweeps");

  EigenResult out;
  out.values.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.values[static_cast<std::size_t>(i)] = work.at(i, i).w;
  out.vectors = std::move(v);
  sort_eigen(out);
  return out;
}

namespace {

// Partner of an embedded eigenvector: for v = (v1, v2), sigma(v) = (conj v2,
// -conj v1) is again an eigenvector at the same eigenvalue and is always
// orthogonal to v; the pair (v, -sigma(v)) is the embedded image of one
// quaternionic column.
Morphism sigma_partner(const Morphism& v) {
  const int half = v.rows() / 2;
  Morphism s(FieldTag::C, v.rows(), 1);
  for (int i = 0; i < half; ++i) {
    s.at(i, 0) = conj(v.at(i + half, 0));
    s.at(i + half, 0) = neg(conj(v.at(i, 0)));
  }
  return s;
}

EigenResult hermitian_eigen_quaternion(const Morphism& a, const ToleranceProfile& tol) {
  const int n = a.rows();
  const EigenResult ce = jacobi_hermitian(embed_complex(a), tol);

  EigenResult out;
  out.vectors = Morphism(FieldTag::H, n, n);
  std::vector<Morphism> chosen;  // complex columns already claimed, orthonormal
  chosen.reserve(static_cast<std::size_t>(2 * n));
  int picked = 0;
  for (int idx = 0; idx < 2 * n && picked < n; ++idx) {
    Morphism v = ce.vectors.column(idx);
    // Project away the span of the pairs claimed so far; within a degenerate
    // cluster a later eigenvector may half-overlap an earlier partner.
    for (int pass = 0; pass < 2; ++pass)
      for (const Morphism& q : chosen) v = v - q.scaled_right(inner(v, q));
    const double r = frobenius_norm(v);
    if (r < 1e-4) continue;  // already covered by a chosen pair
    v = v.scaled(1.0 / r);
    const Morphism partner = -sigma_partner(v);
    chosen.push_back(v);
    chosen.push_back(partner);
    // v = (v1, v2) is the first embedded column of u = v1 - conj(v2) j.
    Morphism u(FieldTag::H, n, 1);
    for (int i = 0; i < n; ++i) {
      const Scalar& v1 = v.at(i, 0);
      const Scalar& v2 = v.at(i + n, 0);
      u.at(i, 0) = Scalar::quaternion(v1.w, v1.x, -v2.w, v2.x);
    }
    out.vectors.set_column(picked, u);
    out.values.push_back(ce.values[static_cast<std::size_t>(idx)]);
    ++picked;
  }
  if (picked != n)
    throw std::runtime_error("quaternionic eigenvector extraction came up short");
  return out;
}

}  // namespace

EigenResult hermitian_eigen(const Morphism& a, const ToleranceProfile& tol) {
  if (a.rows() != a.cols()) throw std::invalid_argument("eigensolver needs a square matrix");
  if (a.field() != FieldTag::H) return jacobi_hermitian(a, tol);
  const double mag = std::max(1.0, frobenius_norm(a));
  if (!is_self_adjoint(a, 1e-8 * mag))
    throw std::invalid_argument("eigensolver needs a self-adjoint matrix");
  return hermitian_eigen_quaternion(a, tol);
}

namespace {

Morphism assemble_spectral(const EigenResult& eig, const std::vector<double>& f_of_values) {
  const int n = eig.vectors.rows();
  Morphism d(eig.vectors.field(), n, n);
  for (int i = 0; i < n; ++i)
    d.at(i, i) = Scalar::real(f_of_values[static_cast<std::size_t>(i)], d.field());
  return eig.vectors * d * dagger(eig.vectors);
}

}  // namespace

Morphism sqrt_psd(const Morphism& a, const ToleranceProfile& tol) {
  EigenResult eig = hermitian_eigen(a, tol);  // rejects non-self-adjoint input
  std::vector<double> roots(eig.values.size());
  for (std::size_t i = 0; i < eig.values.size(); ++i) {
    double lambda = eig.values[i];
    if (lambda < -1e-10)
      throw std::domain_error("matrix is not positive semidefinite (eigenvalue " +
                              std::to_string(lambda) + ")");
    if (lambda < 0.0) lambda = 0.0;
    roots[i] = std::sqrt(lambda);
  }
  return assemble_spectral(eig, roots);
}

PolarResult polar(const Morphism& q, const ToleranceProfile& tol) {
  if (q.rows() != q.cols()) throw std::invalid_argument("polar expects a square matrix");
  const EigenResult eig = hermitian_eigen(dagger(q) * q, tol);
  std::vector<double> roots(eig.values.size()), inv_roots(eig.values.size());
  for (std::size_t i = 0; i < eig.values.size(); ++i) {
    const double lambda = std::max(eig.values[i], 0.0);
    const double sigma = std::sqrt(lambda);
    if (sigma < tol.drop)
      throw std::domain_error("polar factor undefined: smallest singular value " +
                              std::to_string(sigma) + " below " + std::to_string(tol.drop));
    roots[i] = sigma;
    inv_roots[i] = 1.0 / sigma;
  }
  PolarResult out;
  out.positive = assemble_spectral(eig, roots);
  out.unitary = q * assemble_spectral(eig, inv_roots);
  return out;
}

double operator_norm(const Morphism& a, const ToleranceProfile& tol) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  // Work with the smaller Gram matrix of the two.
  const Morphism gram = a.rows() <= a.cols() ? a * dagger(a) : dagger(a) * a;
  const EigenResult eig = hermitian_eigen(gram, tol);
  const double top = eig.values.empty() ? 0.0 : eig.values.back();
  return std::sqrt(std::max(top, 0.0));
}

}  // namespace daghilb
