#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "tdks/field.hpp"

namespace tdks {

// Zero-padded discrete convolution on the interior lattice:
//   out[p] = sum_q  kernel(x_p - x_q) * f[q] * cell_volume,
// with f extended by zero outside the box. Internally the sum is evaluated as
// a circular convolution on a 2x-padded grid via FFTW (real transforms). The
// kernel is tabulated once on the offset lattice at construction.
//
// Instances are not thread-safe (shared FFT buffers); evaluation is
// deterministic (FFTW_ESTIMATE plans, serial transforms).
class FftConvolver {
 public:
  // kernel(z1,z2,z3) is sampled at all offsets z = (di*h1, dj*h2, dk*h3),
  // |di| < n1, |dj| < n2, |dk| < n3.
  FftConvolver(const GridSpec& grid, const std::function<double(double, double, double)>& kernel);
  ~FftConvolver();

  FftConvolver(const FftConvolver&) = delete;
  FftConvolver& operator=(const FftConvolver&) = delete;

  RealField convolve(const RealField& f) const;

  // Volume-weighted kernel lattice norms: sum |k(z)|^p * vol over offsets,
  // to the power 1/p.
  double kernel_l1() const { return kernel_l1_; }
  double kernel_lp(double p) const;

  const GridSpec& grid() const { return grid_; }

 private:
  struct Impl;
  GridSpec grid_;
  double kernel_l1_ = 0.0;
  std::vector<double> kernel_samples_;  // k(z)*vol on the padded lattice (wrapped layout)
  std::unique_ptr<Impl> impl_;
};

// Truncated Hartree kernel: 1/|z| up to diam(Omega), raised-cosine taper to
// zero on [diam, 1.25*diam]; the z = 0 self-cell value is the average of
// 1/|z| over the equal-volume sphere of one cell.
std::function<double(double, double, double)> hartree_kernel(const GridSpec& grid);

// Radial C^2 bump a*(1 - (r/R)^2)^3 on r < R, zero outside.
std::function<double(double, double, double)> bump_kernel(double amplitude, double radius);

}  // namespace tdks
