#include "daghilb/scalar.hpp"

#include <stdexcept>

namespace daghilb {

const char* field_name(FieldTag f) {
  switch (f) {
    case FieldTag::R: return "R";
    case FieldTag::C: return "C";
    default: return "H";
  }
}

FieldTag field_from_name(const std::string& name) {
  if (name == "R" || name == "r") return FieldTag::R;
  if (name == "C" || name == "c") return FieldTag::C;
  if (name == "H" || name == "h") return FieldTag::H;
  throw std::invalid_argument("unknown field name: " + name);
}

Scalar::Scalar(FieldTag f, double w_, double x_, double y_, double z_)
    : field(f), w(w_), x(x_), y(y_), z(z_) {
  const int arity = field_arity(f);
  if ((arity < 2 && x != 0.0) || (arity < 4 && (y != 0.0 || z != 0.0)))
    throw std::invalid_argument(std::string("component outside field ") + field_name(f));
}

Scalar Scalar::unit(FieldTag f, int axis) {
  if (axis < 0 || axis >= field_arity(f))
    throw std::invalid_argument("unit axis outside field arity");
  Scalar s = Scalar::zero(f);
  switch (axis) {
    case 0: s.w = 1.0; break;
    case 1: s.x = 1.0; break;
    case 2: s.y = 1.0; break;
    default: s.z = 1.0; break;
  }
  return s;
}

namespace {
void require_same_field(const Scalar& a, const Scalar& b) {
  if (a.field != b.field)
    throw std::invalid_argument(std::string("field mismatch: ") + field_name(a.field) +
                                " vs " + field_name(b.field));
}
}  // namespace

Scalar add(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  Scalar r;
  r.field = a.field;
  r.w = a.w + b.w;
  r.x = a.x + b.x;
  r.y = a.y + b.y;
  r.z = a.z + b.z;
  return r;
}

Scalar sub(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  Scalar r;
  r.field = a.field;
  r.w = a.w - b.w;
  r.x = a.x - b.x;
  r.y = a.y - b.y;
  r.z = a.z - b.z;
  return r;
}

// Hamilton product; with zero j,k (or i,j,k) parts it collapses to complex
// (or real) multiplication, so all three rings share this one routine.
Scalar mul(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  Scalar r;
  r.field = a.field;
  r.w = a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z;
  r.x = a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y;
  r.y = a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x;
  r.z = a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w;
  return r;
}

Scalar neg(const Scalar& a) {
  Scalar r = a;
  r.w = -r.w;
  r.x = -r.x;
  r.y = -r.y;
  r.z = -r.z;
  return r;
}

Scalar conj(const Scalar& a) {
  Scalar r = a;
  r.x = -r.x;
  r.y = -r.y;
  r.z = -r.z;
  return r;
}

double norm_sq(const Scalar& a) { return a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z; }

double norm(const Scalar& a) { return std::sqrt(norm_sq(a)); }

Scalar inv(const Scalar& a) {
  const double n2 = norm_sq(a);
  if (n2 == 0.0) throw std::domain_error("inv of zero scalar");
  Scalar c = conj(a);
  c.w /= n2;
  c.x /= n2;
  c.y /= n2;
  c.z /= n2;
  return c;
}

Scalar promote(const Scalar& a, FieldTag target) {
  if (!field_extends(target, a.field))
    throw std::invalid_argument(std::string("cannot narrow ") + field_name(a.field) +
                                " to " + field_name(target));
  Scalar r = a;
  r.field = target;
  return r;
}

}  // namespace daghilb
