#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "tdks/field.hpp"

namespace tdks {

// All randomness in the project flows from a single scenario seed through
// this wrapper. Transforms are hand-rolled so a given engine state always
// maps to the same doubles.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() {  // in [0, 1)
    return double(eng_() >> 11) * 0x1.0p-53;
  }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  double normal() {  // Box-Muller, one draw per call pair
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    while (u1 == 0.0) u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }
  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

inline std::uint64_t fnv1a64(std::string_view s, std::uint64_t h = 1469598103934665603ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Independent substream for a named purpose.
inline Rng derived_rng(std::uint64_t seed, std::string_view tag) {
  return Rng(seed ^ fnv1a64(tag));
}

RealField random_real_field(const GridSpec& grid, Rng& rng);
ComplexField random_complex_field(const GridSpec& grid, Rng& rng);

}  // namespace tdks
