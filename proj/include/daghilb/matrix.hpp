#pragma once
// Dense matrices over R, C or H with row-major storage.  A Morphism with c
// columns and r rows is a linear map K^c -> K^r acting on column vectors by
// entry-times-vector-entry products, sum_j A(i,j) * v(j); scalars act on the
// right of vectors, which is the order that stays linear over H.

#include <initializer_list>
#include <vector>

#include "daghilb/scalar.hpp"
#include "daghilb/tolerance.hpp"

namespace daghilb {

class Morphism {
 public:
  Morphism() = default;
  Morphism(FieldTag f, int rows, int cols);  // zero-filled

  static Morphism identity(FieldTag f, int n);
  static Morphism from_rows(FieldTag f,
                            std::initializer_list<std::initializer_list<Scalar>> rows);
  static Morphism from_real_rows(FieldTag f,
                                 std::initializer_list<std::initializer_list<double>> rows);
  // k-th standard basis column of K^n
  static Morphism basis_column(FieldTag f, int n, int k);

  FieldTag field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_vector() const { return cols_ == 1; }

  Scalar& at(int i, int j);
  const Scalar& at(int i, int j) const;
  Scalar& operator()(int i, int j) { return at(i, j); }
  const Scalar& operator()(int i, int j) const { return at(i, j); }

  Morphism operator*(const Morphism& rhs) const;
  Morphism operator+(const Morphism& rhs) const;
  Morphism operator-(const Morphism& rhs) const;
  Morphism operator-() const;

  // lambda * A and A * lambda, entrywise on the chosen side
  Morphism scaled_left(const Scalar& s) const;
  Morphism scaled_right(const Scalar& s) const;
  Morphism scaled(double r) const;

  Morphism column(int j) const;
  Morphism submatrix(int row0, int col0, int nrows, int ncols) const;
  void set_column(int j, const Morphism& v);
  void set_block(int row0, int col0, const Morphism& block);

  bool operator==(const Morphism& o) const;

 private:
  FieldTag field_{FieldTag::R};
  int rows_{0}, cols_{0};
  std::vector<Scalar> data_;
};

Morphism dagger(const Morphism& a);  // conjugate transpose

// <u, v> = dagger(v) * u for column vectors; right-linear in u.
Scalar inner(const Morphism& u, const Morphism& v);

double frobenius_norm(const Morphism& a);
double max_abs(const Morphism& a);
// Frobenius distance, the residual measure used throughout.
double distance(const Morphism& a, const Morphism& b);
bool approx_equal(const Morphism& a, const Morphism& b, double tol);
bool is_zero(const Morphism& a, double tol);

Morphism hstack(const Morphism& a, const Morphism& b);
Morphism vstack(const Morphism& a, const Morphism& b);
// block diag(a, b), the matrix of a (+) b on biproduct coordinates
Morphism direct_sum(const Morphism& a, const Morphism& b);

Morphism promote(const Morphism& a, FieldTag target);

}  // namespace daghilb
