#include "tdks/field.hpp"

#include <cmath>

namespace tdks {

bool all_finite(const RealField& f) {
  for (double v : f.values)
    if (!std::isfinite(v)) return false;
  return true;
}

bool all_finite(const ComplexField& f) {
  for (const cplx& v : f.values)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

bool all_finite(const OrbitalSet& s) {
  for (const auto& o : s.orbitals)
    if (!all_finite(o)) return false;
  return true;
}

}  // namespace tdks
