#pragma once
// Deterministic sampling for the property checks.  splitmix64 underneath:
// every (check name, seed) pair owns an independent stream, so adding a new
// check never shifts the samples an existing one sees.

#include <cstdint>
#include <string_view>

#include "daghilb/scalar.hpp"

namespace daghilb {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t v = (state_ += 0x9E3779B97F4A7C15ull);
    v = (v ^ (v >> 30)) * 0xBF58476D1CE4E5B9ull;
    v = (v ^ (v >> 27)) * 0x94D049BB133111EBull;
    return v ^ (v >> 31);
  }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // inclusive bounds
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // Box-Muller, one fresh draw per call; no cached spare, so replay is exact.
  double gaussian() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

  Scalar scalar(FieldTag f) {
    Scalar s = Scalar::zero(f);
    s.w = gaussian();
    if (field_arity(f) >= 2) s.x = gaussian();
    if (field_arity(f) >= 4) {
      s.y = gaussian();
      s.z = gaussian();
    }
    return s;
  }

  Scalar nonzero_scalar(FieldTag f, double floor = 1e-6) {
    for (;;) {
      Scalar s = scalar(f);
      if (norm(s) > floor) return s;
    }
  }

  Scalar unit_scalar(FieldTag f) {
    Scalar s = nonzero_scalar(f);
    return scale(s, 1.0 / norm(s));
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// Independent stream for a named check under a user seed.
inline Rng stream(std::uint64_t seed, std::string_view check_name) {
  return Rng(seed ^ fnv1a(check_name));
}

}  // namespace daghilb
