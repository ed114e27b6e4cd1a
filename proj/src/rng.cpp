#include "tdks/rng.hpp"

namespace tdks {

RealField random_real_field(const GridSpec& grid, Rng& rng) {
  RealField f(grid);
  for (double& v : f.values) v = rng.uniform(-1.0, 1.0);
  return f;
}

ComplexField random_complex_field(const GridSpec& grid, Rng& rng) {
  ComplexField f(grid);
  for (cplx& v : f.values) {
    double re = rng.uniform(-1.0, 1.0);
    double im = rng.uniform(-1.0, 1.0);
    v = cplx(re, im);
  }
  return f;
}

}  // namespace tdks
