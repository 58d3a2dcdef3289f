#include "daghilb/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace daghilb {

namespace {
void require_same_field(const Morphism& a, const Morphism& b) {
  if (a.field() != b.field())
    throw std::invalid_argument(std::string("field mismatch: ") + field_name(a.field()) +
                                " vs " + field_name(b.field()));
}

void require_same_shape(const Morphism& a, const Morphism& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("shape mismatch: " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
}
}  // namespace

Morphism::Morphism(FieldTag f, int rows, int cols) : field_(f), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
               Scalar::zero(f));
}

Morphism Morphism::identity(FieldTag f, int n) {
  Morphism m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Morphism Morphism::from_rows(FieldTag f,
                             std::initializer_list<std::initializer_list<Scalar>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  Morphism m(f, r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) throw std::invalid_argument("ragged row list");
    int j = 0;
    for (const Scalar& s : row) m.at(i, j++) = promote(s, f);
    ++i;
  }
  return m;
}

Morphism Morphism::from_real_rows(FieldTag f,
                                  std::initializer_list<std::initializer_list<double>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  Morphism m(f, r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) throw std::invalid_argument("ragged row list");
    int j = 0;
    for (double v : row) m.at(i, j++) = Scalar::real(v, f);
    ++i;
  }
  return m;
}

Morphism Morphism::basis_column(FieldTag f, int n, int k) {
  if (k < 0 || k >= n) throw std::invalid_argument("basis index out of range");
  Morphism v(f, n, 1);
  v.at(k, 0) = Scalar::one(f);
  return v;
}

Scalar& Morphism::at(int i, int j) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw std::out_of_range("matrix index out of range");
  return data_[static_cast<std::size_t>(i) * cols_ + j];
}

const Scalar& Morphism::at(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw std::out_of_range("matrix index out of range");
  return data_[static_cast<std::size_t>(i) * cols_ + j];
}

Morphism Morphism::operator*(const Morphism& rhs) const {
  require_same_field(*this, rhs);
  if (cols_ != rhs.rows_)
    throw std::invalid_argument("composition shape mismatch: " + std::to_string(cols_) +
                                " vs " + std::to_string(rhs.rows_));
  Morphism out(field_, rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.w == 0.0 && a.x == 0.0 && a.y == 0.0 && a.z == 0.0) continue;
      for (int j = 0; j < rhs.cols_; ++j)
        out.at(i, j) = add(out.at(i, j), mul(a, rhs.at(k, j)));
    }
  return out;
}

Morphism Morphism::operator+(const Morphism& rhs) const {
  require_same_shape(*this, rhs);
  Morphism out = *this;
  for (std::size_t n = 0; n < data_.size(); ++n) out.data_[n] = add(data_[n], rhs.data_[n]);
  return out;
}

Morphism Morphism::operator-(const Morphism& rhs) const {
  require_same_shape(*this, rhs);
  Morphism out = *this;
  for (std::size_t n = 0; n < data_.size(); ++n) out.data_[n] = sub(data_[n], rhs.data_[n]);
  return out;
}

Morphism Morphism::operator-() const {
  Morphism out = *this;
  for (Scalar& s : out.data_) s = neg(s);
  return out;
}

Morphism Morphism::scaled_left(const Scalar& s) const {
  Morphism out = *this;
  const Scalar f = promote(s, field_);
  for (Scalar& e : out.data_) e = mul(f, e);
  return out;
}

Morphism Morphism::scaled_right(const Scalar& s) const {
  Morphism out = *this;
  const Scalar f = promote(s, field_);
  for (Scalar& e : out.data_) e = mul(e, f);
  return out;
}

Morphism Morphism::scaled(double r) const {
  Morphism out = *this;
  for (Scalar& e : out.data_) e = scale(e, r);
  return out;
}

Morphism Morphism::column(int j) const { return submatrix(0, j, rows_, 1); }

Morphism Morphism::submatrix(int row0, int col0, int nrows, int ncols) const {
  if (row0 < 0 || col0 < 0 || nrows < 0 || ncols < 0 || row0 + nrows > rows_ ||
      col0 + ncols > cols_)
    throw std::out_of_range("submatrix outside matrix");
  Morphism out(field_, nrows, ncols);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) out.at(i, j) = at(row0 + i, col0 + j);
  return out;
}

void Morphism::set_column(int j, const Morphism& v) { set_block(0, j, v); }

void Morphism::set_block(int row0, int col0, const Morphism& block) {
  if (block.field_ != field_) throw std::invalid_argument("field mismatch in set_block");
  if (row0 < 0 || col0 < 0 || row0 + block.rows_ > rows_ || col0 + block.cols_ > cols_)
    throw std::out_of_range("block outside matrix");
  for (int i = 0; i < block.rows_; ++i)
    for (int j = 0; j < block.cols_; ++j) at(row0 + i, col0 + j) = block.at(i, j);
}

bool Morphism::operator==(const Morphism& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Morphism dagger(const Morphism& a) {
  Morphism out(a.field(), a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(j, i) = conj(a.at(i, j));
  return out;
}

Scalar inner(const Morphism& u, const Morphism& v) {
  if (!u.is_vector() || !v.is_vector())
    throw std::invalid_argument("inner product needs column vectors");
  const Morphism p = dagger(v) * u;  // 1x1
  return p.at(0, 0);
}

double frobenius_norm(const Morphism& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s += norm_sq(a.at(i, j));
  return std::sqrt(s);
}

double max_abs(const Morphism& a) {
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m = std::max(m, norm(a.at(i, j)));
  return m;
}

double distance(const Morphism& a, const Morphism& b) { return frobenius_norm(a - b); }

bool approx_equal(const Morphism& a, const Morphism& b, double tol) {
  return a.field() == b.field() && a.rows() == b.rows() && a.cols() == b.cols() &&
         distance(a, b) <= tol;
}

bool is_zero(const Morphism& a, double tol) { return frobenius_norm(a) <= tol; }

Morphism hstack(const Morphism& a, const Morphism& b) {
  if (a.field() != b.field() || a.rows() != b.rows())
    throw std::invalid_argument("hstack needs equal fields and row counts");
  Morphism out(a.field(), a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

Morphism vstack(const Morphism& a, const Morphism& b) {
  if (a.field() != b.field() || a.cols() != b.cols())
    throw std::invalid_argument("vstack needs equal fields and column counts");
  Morphism out(a.field(), a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

Morphism direct_sum(const Morphism& a, const Morphism& b) {
  if (a.field() != b.field()) throw std::invalid_argument("field mismatch in direct_sum");
  Morphism out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

Morphism promote(const Morphism& a, FieldTag target) {
  Morphism out(target, a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = promote(a.at(i, j), target);
  return out;
}

}  // namespace daghilb
