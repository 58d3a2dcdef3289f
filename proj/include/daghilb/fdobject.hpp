#pragma once

#include <string>

#include "daghilb/scalar.hpp"

namespace daghilb {

// An object of the category: a finite-dimensional column space over one of
// the three rings.  dim 0 is the zero object, dim 1 the generating object K.
struct FdObject {
  FieldTag field{FieldTag::R};
  int dim{0};

  FdObject() = default;
  FdObject(FieldTag f, int d);

  bool is_zero() const { return dim == 0; }
  bool is_generator() const { return dim == 1; }

  bool operator==(const FdObject& o) const { return field == o.field && dim == o.dim; }
  bool operator!=(const FdObject& o) const { return !(*this == o); }

  std::string describe() const;
};

inline FdObject generator(FieldTag f) { return FdObject(f, 1); }
inline FdObject zero_object(FieldTag f) { return FdObject(f, 0); }

}  // namespace daghilb
