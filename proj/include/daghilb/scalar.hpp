#pragma once
// Scalars of the three involutive division rings R, C and H, stored uniformly
// as quaternion components with a field tag.  Components beyond the field's
// arity stay exactly zero, so one Hamilton product serves all three rings.

#include <cmath>
#include <cstdint>
#include <string>

namespace daghilb {

enum class FieldTag : std::uint8_t { R, C, H };

inline int field_arity(FieldTag f) {
  switch (f) {
    case FieldTag::R: return 1;
    case FieldTag::C: return 2;
    default: return 4;
  }
}

const char* field_name(FieldTag f);
FieldTag field_from_name(const std::string& name);

// R embeds in C embeds in H.
inline bool field_extends(FieldTag big, FieldTag small) {
  return field_arity(big) >= field_arity(small);
}

struct Scalar {
  FieldTag field{FieldTag::R};
  double w{0.0}, x{0.0}, y{0.0}, z{0.0};

  Scalar() = default;
  Scalar(FieldTag f, double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0);

  static Scalar zero(FieldTag f) { return Scalar(f, 0.0); }
  static Scalar one(FieldTag f) { return Scalar(f, 1.0); }
  static Scalar real(double v, FieldTag f = FieldTag::R) { return Scalar(f, v); }
  static Scalar complex_val(double re, double im) { return Scalar(FieldTag::C, re, im); }
  static Scalar quaternion(double w, double x, double y, double z) {
    return Scalar(FieldTag::H, w, x, y, z);
  }
  // axis 0..3 -> 1, i, j, k (axis must exist in the field)
  static Scalar unit(FieldTag f, int axis);

  bool operator==(const Scalar& o) const {
    return field == o.field && w == o.w && x == o.x && y == o.y && z == o.z;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
};

// Core ring operations.  Mixed fields are a caller error, not a promotion.
Scalar add(const Scalar& a, const Scalar& b);
Scalar sub(const Scalar& a, const Scalar& b);
Scalar mul(const Scalar& a, const Scalar& b);
Scalar neg(const Scalar& a);
Scalar conj(const Scalar& a);
Scalar inv(const Scalar& a);  // conj(a)/|a|^2; throws std::domain_error on 0
double norm_sq(const Scalar& a);
double norm(const Scalar& a);

inline Scalar operator+(const Scalar& a, const Scalar& b) { return add(a, b); }
inline Scalar operator-(const Scalar& a, const Scalar& b) { return sub(a, b); }
inline Scalar operator*(const Scalar& a, const Scalar& b) { return mul(a, b); }
inline Scalar operator-(const Scalar& a) { return neg(a); }

inline bool is_zero(const Scalar& a, double tol = 0.0) { return norm(a) <= tol; }
inline bool approx_equal(const Scalar& a, const Scalar& b, double tol) {
  return a.field == b.field && norm(sub(a, b)) <= tol;
}

// Re-tags a scalar into a larger field (R -> C -> H); narrowing throws.
Scalar promote(const Scalar& a, FieldTag target);

// Multiply by a plain real without leaving the field.
inline Scalar scale(const Scalar& a, double r) {
  return Scalar(a.field, a.w * r, a.x * r, a.y * r, a.z * r);
}

}  // namespace daghilb
