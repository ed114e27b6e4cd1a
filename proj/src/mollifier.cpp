#include "tdks/mollifier.hpp"

#include <algorithm>
#include <cmath>

#include "tdks/norms.hpp"

namespace tdks {

namespace {
double bump_profile(double r2) {  // exp(-1/(1-|x|^2)) on |x| < 1, unnormalized
  if (r2 >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - r2));
}
}  // namespace

MollifierKernel MollifierKernel::make(const GridSpec& grid, double epsilon) {
  const double h = grid.max_spacing();
  if (!(epsilon > 0.0) || epsilon < 2.0 * h * (1.0 - 1e-12))
    fail(errc::kernel_underresolved,
         "mollifier width must be at least two grid spacings (epsilon >= 2h)");
  MollifierKernel k;
  k.grid_ = grid;
  k.epsilon_ = epsilon;

  const double h0 = grid.spacing(0), h1 = grid.spacing(1), h2 = grid.spacing(2);
  const int r0 = int(std::ceil(epsilon / h0));
  const int r1 = int(std::ceil(epsilon / h1));
  const int r2 = int(std::ceil(epsilon / h2));
  double total = 0.0;
  for (int di = -r0; di <= r0; ++di)
    for (int dj = -r1; dj <= r1; ++dj)
      for (int dk = -r2; dk <= r2; ++dk) {
        double x = di * h0, y = dj * h1, z = dk * h2;
        double rho2 = (x * x + y * y + z * z) / (epsilon * epsilon);
        double v = bump_profile(rho2);
        if (v > 0.0) {
          k.taps_.push_back({di, dj, dk, v});
          total += v;
        }
      }
  // Renormalize so the discrete integral is exactly one; tap weights absorb
  // the cell volume, so applying the kernel is a plain weighted sum.
  for (auto& tap : k.taps_) tap.weight /= total;
  return k;
}

RealField MollifierKernel::apply(const RealField& f) const {
  if (!(f.grid == grid_)) fail(errc::invalid_argument, "mollifier grid mismatch");
  const int n0 = grid_.points[0], n1 = grid_.points[1], n2 = grid_.points[2];
  RealField out(grid_);
  // Scatter form: for each tap, add the shifted field block. Ranges are
  // clipped so reads outside the box see the zero extension.
  for (const Tap& tap : taps_) {
    const int i_lo = std::max(0, tap.di), i_hi = std::min(n0, n0 + tap.di);
    const int j_lo = std::max(0, tap.dj), j_hi = std::min(n1, n1 + tap.dj);
    const int k_lo = std::max(0, tap.dk), k_hi = std::min(n2, n2 + tap.dk);
    for (int i = i_lo; i < i_hi; ++i)
      for (int j = j_lo; j < j_hi; ++j) {
        double* dst = out.values.data() + grid_.index(i, j, k_lo);
        const double* src = f.values.data() + grid_.index(i - tap.di, j - tap.dj, k_lo - tap.dk);
        const double w = tap.weight;
        for (int k = 0; k < k_hi - k_lo; ++k) dst[k] += w * src[k];
      }
  }
  return out;
}

double MollifierKernel::lattice_lp(double p) const {
  if (!(p >= 1.0)) fail(errc::invalid_exponent, "kernel lattice norm requires p >= 1");
  const double vol = grid_.cell_volume();
  double acc = 0.0;
  for (const Tap& tap : taps_) acc += std::pow(tap.weight / vol, p);
  return std::pow(acc * vol, 1.0 / p);
}

RealField mollify(const RealField& f, const MollifierKernel& k) { return k.apply(f); }

std::vector<double> mollifier_convergence(const RealField& f,
                                          const std::vector<double>& eps_list) {
  std::vector<double> distances;
  distances.reserve(eps_list.size());
  for (double eps : eps_list) {
    MollifierKernel k = MollifierKernel::make(f.grid, eps);
    RealField smoothed = k.apply(f);
    for (std::size_t i = 0; i < smoothed.values.size(); ++i) smoothed.values[i] -= f.values[i];
    distances.push_back(l2_norm(smoothed));
  }
  return distances;
}

}  // namespace tdks
