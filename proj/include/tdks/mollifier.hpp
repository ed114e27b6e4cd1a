#pragma once

#include <vector>

#include "tdks/field.hpp"

namespace tdks {

// The standard C-infinity bump phi_1(x) = c * exp(-1/(1-|x|^2)) on |x| < 1,
// rescaled to phi_eps(x) = eps^-3 phi_1(x/eps) and tabulated on the grid
// offset lattice. After sampling, the weights are renormalized so the
// discrete integral is exactly one; mollification is then nonexpansive in
// every discrete L^p to machine precision and reproduces constants away from
// the boundary layer.
class MollifierKernel {
 public:
  // Throws KernelUnderresolved if eps < 2 * max grid spacing.
  static MollifierKernel make(const GridSpec& grid, double epsilon);

  double epsilon() const { return epsilon_; }
  const GridSpec& grid() const { return grid_; }

  // f_eps = phi_eps * f (zero extension outside the box). Direct stencil sum;
  // weights are nonnegative, so sign is preserved exactly.
  RealField apply(const RealField& f) const;

  // Volume-weighted lattice L^p norm of the kernel (p >= 1). l1 is exactly 1.
  double lattice_lp(double p) const;

  struct Tap {
    int di, dj, dk;
    double weight;  // phi_eps(z) * cell_volume after renormalization
  };
  const std::vector<Tap>& taps() const { return taps_; }

 private:
  GridSpec grid_;
  double epsilon_ = 0.0;
  std::vector<Tap> taps_;
};

RealField mollify(const RealField& f, const MollifierKernel& k);

// ||f_eps - f||_L2 for each eps in the (decreasing) list. All eps >= 2h.
std::vector<double> mollifier_convergence(const RealField& f, const std::vector<double>& eps_list);

}  // namespace tdks
