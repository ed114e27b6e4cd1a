#include "tdks/convolution.hpp"

#include <fftw3.h>

#include <cmath>
#include <numbers>

namespace tdks {

struct FftConvolver::Impl {
  int m0, m1, m2;          // padded dims
  std::size_t real_count;  // m0*m1*m2
  std::size_t cplx_count;  // m0*m1*(m2/2+1)
  double* work_real = nullptr;
  fftw_complex* work_cplx = nullptr;
  fftw_complex* kernel_hat = nullptr;
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;

  ~Impl() {
    if (forward) fftw_destroy_plan(forward);
    if (backward) fftw_destroy_plan(backward);
    if (work_real) fftw_free(work_real);
    if (work_cplx) fftw_free(work_cplx);
    if (kernel_hat) fftw_free(kernel_hat);
  }
};

FftConvolver::FftConvolver(const GridSpec& grid,
                           const std::function<double(double, double, double)>& kernel)
    : grid_(grid), impl_(std::make_unique<Impl>()) {
  const int n0 = grid.points[0], n1 = grid.points[1], n2 = grid.points[2];
  auto& im = *impl_;
  im.m0 = 2 * n0;
  im.m1 = 2 * n1;
  im.m2 = 2 * n2;
  im.real_count = std::size_t(im.m0) * im.m1 * im.m2;
  im.cplx_count = std::size_t(im.m0) * im.m1 * (im.m2 / 2 + 1);
  im.work_real = fftw_alloc_real(im.real_count);
  im.work_cplx = fftw_alloc_complex(im.cplx_count);
  im.kernel_hat = fftw_alloc_complex(im.cplx_count);
  // FFTW_ESTIMATE keeps planning input-independent and deterministic.
  im.forward = fftw_plan_dft_r2c_3d(im.m0, im.m1, im.m2, im.work_real, im.work_cplx,
                                    FFTW_ESTIMATE);
  im.backward = fftw_plan_dft_c2r_3d(im.m0, im.m1, im.m2, im.work_cplx, im.work_real,
                                     FFTW_ESTIMATE);

  // Tabulate kernel(z) * cell_volume on the offset lattice, wrapped into the
  // padded array so circular convolution realizes the zero-padded linear one.
  const double h0 = grid.spacing(0), h1 = grid.spacing(1), h2 = grid.spacing(2);
  const double vol = grid.cell_volume();
  std::fill(im.work_real, im.work_real + im.real_count, 0.0);
  kernel_samples_.reserve(std::size_t(2 * n0 - 1) * (2 * n1 - 1) * (2 * n2 - 1));
  for (int di = -(n0 - 1); di <= n0 - 1; ++di)
    for (int dj = -(n1 - 1); dj <= n1 - 1; ++dj)
      for (int dk = -(n2 - 1); dk <= n2 - 1; ++dk) {
        double v = kernel(di * h0, dj * h1, dk * h2);
        kernel_samples_.push_back(v);
        kernel_l1_ += std::abs(v) * vol;
        std::size_t wi = std::size_t((di + im.m0) % im.m0);
        std::size_t wj = std::size_t((dj + im.m1) % im.m1);
        std::size_t wk = std::size_t((dk + im.m2) % im.m2);
        im.work_real[(wi * im.m1 + wj) * im.m2 + wk] = v * vol;
      }
  fftw_execute(im.forward);
  std::copy(reinterpret_cast<double*>(im.work_cplx),
            reinterpret_cast<double*>(im.work_cplx) + 2 * im.cplx_count,
            reinterpret_cast<double*>(im.kernel_hat));
}

FftConvolver::~FftConvolver() = default;

double FftConvolver::kernel_lp(double p) const {
  double acc = 0.0;
  for (double v : kernel_samples_) acc += std::pow(std::abs(v), p);
  return std::pow(acc * grid_.cell_volume(), 1.0 / p);
}

RealField FftConvolver::convolve(const RealField& f) const {
  if (!(f.grid == grid_)) fail(errc::invalid_argument, "convolver grid mismatch");
  auto& im = *impl_;
  const int n0 = grid_.points[0], n1 = grid_.points[1], n2 = grid_.points[2];
  std::fill(im.work_real, im.work_real + im.real_count, 0.0);
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n1; ++j) {
      const double* src = f.values.data() + grid_.index(i, j, 0);
      double* dst = im.work_real + (std::size_t(i) * im.m1 + j) * im.m2;
      std::copy(src, src + n2, dst);
    }
  fftw_execute(im.forward);
  const double scale = 1.0 / double(im.real_count);
  for (std::size_t i = 0; i < im.cplx_count; ++i) {
    const double ar = im.work_cplx[i][0], ai = im.work_cplx[i][1];
    const double br = im.kernel_hat[i][0], bi = im.kernel_hat[i][1];
    im.work_cplx[i][0] = (ar * br - ai * bi) * scale;
    im.work_cplx[i][1] = (ar * bi + ai * br) * scale;
  }
  fftw_execute(im.backward);
  RealField out(grid_);
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n1; ++j) {
      const double* src = im.work_real + (std::size_t(i) * im.m1 + j) * im.m2;
      double* dst = out.values.data() + grid_.index(i, j, 0);
      std::copy(src, src + n2, dst);
    }
  return out;
}

std::function<double(double, double, double)> hartree_kernel(const GridSpec& grid) {
  const double diam = grid.diameter();
  const double taper_end = 1.25 * diam;
  // Self-cell value: average of 1/|z| over the sphere of one cell volume.
  const double r0 = std::cbrt(3.0 * grid.cell_volume() / (4.0 * std::numbers::pi));
  const double self = 1.5 / r0;
  return [diam, taper_end, self](double x, double y, double z) {
    double r = std::sqrt(x * x + y * y + z * z);
    if (r == 0.0) return self;
    if (r <= diam) return 1.0 / r;
    if (r >= taper_end) return 0.0;
    double w = 0.5 * (1.0 + std::cos(std::numbers::pi * (r - diam) / (taper_end - diam)));
    return w / r;
  };
}

std::function<double(double, double, double)> bump_kernel(double amplitude, double radius) {
  return [amplitude, radius](double x, double y, double z) {
    double r2 = (x * x + y * y + z * z) / (radius * radius);
    if (r2 >= 1.0) return 0.0;
    double u = 1.0 - r2;
    return amplitude * u * u * u;
  };
}

}  // namespace tdks
