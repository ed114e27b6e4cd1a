#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tdks/convolution.hpp"
#include "tdks/field.hpp"
#include "tdks/mollifier.hpp"

namespace tdks {

// ---------------------------------------------------------------------------
// Component specs
// ---------------------------------------------------------------------------

// Closed-form external drives. Every kind has V and dV/dt continuous on the
// closed space-time box, with the time derivative available analytically for
// the energy-balance diagnostics.
struct ExternalPotentialSpec {
  enum class Kind { zero, harmonic, dipole_pulse };
  Kind kind = Kind::zero;

  // harmonic: V(x) = 0.5 * omega2 * |x - center|^2
  double omega2 = 0.0;

  // dipole_pulse: V(x,t) = amplitude * (z - center_z) * sin(frequency*t)
  //                        * exp(-(t - 2*width)^2 / (2*width^2))
  double amplitude = 0.0;
  double frequency = 0.0;
  double width = 0.0;

  double value(const GridSpec& grid, double x, double y, double z, double t) const;
  double time_derivative(const GridSpec& grid, double x, double y, double z, double t) const;
  RealField evaluate(const GridSpec& grid, double t) const;
  RealField evaluate_time_derivative(const GridSpec& grid, double t) const;
  bool is_static() const { return kind != Kind::dipole_pulse; }
};

// Power-law local density correction lambda * rho^(alpha/2).
struct LdaSpec {
  double lambda = 0.0;
  double alpha = 1.0;
  bool enabled() const { return lambda != 0.0; }
};

// Throws InvalidLdaParams naming the violated bound. lambda = 0 always passes;
// lambda > 0 requires 1 <= alpha < 4; lambda < 0 requires 1 <= alpha <= 4/3.
void validate_lda_params(const LdaSpec& spec);

// Fixed point charges. Evaluation snaps each center to the nearest
// cell-center-offset position of the grid so no node ever coincides with an
// ion; validation requires the given centers to sit at least one spacing
// inside the boundary.
struct IonSpec {
  struct Ion {
    std::array<double, 3> center{};
    double charge = 0.0;
  };
  std::vector<Ion> ions;

  bool enabled() const { return !ions.empty(); }
  bool any_negative() const {
    for (const auto& i : ions)
      if (i.charge < 0.0) return true;
    return false;
  }
};

void validate_ion_spec(const IonSpec& spec, const GridSpec& grid);
std::array<double, 3> snapped_center(const GridSpec& grid, const std::array<double, 3>& x);

// Time-history correction Phi = F * rho(t) + int_0^t kappa(t-s) (G * rho(s)) ds
// with radial C^2 bump kernels F, G and exponential memory weight
// kappa(u) = exp(-u / tau_memory). The memory integral is evaluated by the
// left-endpoint rule on the stored step times.
struct HistoryKernelSpec {
  double amplitude = 0.0;
  double radius = 0.0;  // compact support radius, must be < diam(Omega)
  bool enabled() const { return amplitude != 0.0 && radius > 0.0; }
};

struct HistorySpec {
  HistoryKernelSpec instant;  // F
  HistoryKernelSpec memory;   // G
  double tau_memory = 1.0;

  double kappa(double u) const { return std::exp(-u / tau_memory); }
  double kappa_rate(double u) const { return -std::exp(-u / tau_memory) / tau_memory; }
};

void validate_history_spec(const HistorySpec& spec, const GridSpec& grid);

// Density snapshots at accepted step times, with the G- and F-convolutions
// cached once per entry. Append-only during a run.
class DensityHistory {
 public:
  struct Entry {
    double t;
    RealField rho;
    RealField g_conv;  // G * rho(t)
    RealField f_conv;  // F * rho(t)
  };

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  void append(Entry e);

 private:
  std::vector<Entry> entries_;
};

// ---------------------------------------------------------------------------
// The stack
// ---------------------------------------------------------------------------

// Configuration of every term of the effective potential. When epsilon > 0
// the LDA and Coulomb terms route through the mollifier; the external and
// time-history terms are always passed through unsmoothed.
struct PotentialStack {
  ExternalPotentialSpec external;
  LdaSpec lda;
  IonSpec ions;
  std::optional<HistorySpec> history;
  double epsilon = 0.0;

  bool smoothed() const { return epsilon > 0.0; }
};

void validate_stack(const PotentialStack& stack, const GridSpec& grid);

// Marks a stack as the smoothed model. Requires epsilon > 0; evaluators built
// from the returned stack compose the LDA and Coulomb terms with the
// mollifier and leave the external and history terms untouched.
PotentialStack smooth_stack(const PotentialStack& stack);

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

// Holds the per-grid caches (FFT convolvers, mollifier taps, static Coulomb
// field). Evaluation is pure given (stack, density history, t); the caches
// are immutable after construction.
class PotentialEvaluator {
 public:
  PotentialEvaluator(const PotentialStack& stack, const GridSpec& grid);

  const PotentialStack& stack() const { return stack_; }
  const GridSpec& grid() const { return grid_; }

  // Full effective potential V + W*rho + corrections at time t.
  RealField evaluate(const RealField& rho, double t, const DensityHistory* history = nullptr) const;

  // Quantum-correction part only (LDA + Coulomb + history), smoothing applied
  // per the stack; used by the energy functional.
  RealField correction_field(const RealField& rho, double t,
                             const DensityHistory* history = nullptr) const;

  RealField hartree(const RealField& rho) const;
  RealField lda_term(const RealField& rho) const;        // mollified when epsilon > 0
  const RealField& coulomb_term() const;                 // cached; mollified when epsilon > 0
  const RealField& coulomb_unsmoothed() const;
  RealField history_term(const RealField& rho_now, double t, const DensityHistory& history) const;

  // d/dt of the memory part of the time-history potential in closed form.
  // The piecewise quadrature weights make the rate one-sided at step times;
  // from_left selects the limit from the preceding interval. The
  // instantaneous part F*drho/dt is differenced by the caller from the cached
  // F-convolutions.
  RealField history_memory_rate(double t, const DensityHistory& history,
                                bool from_left = false) const;

  RealField g_convolve(const RealField& rho) const;
  RealField f_convolve(const RealField& rho) const;

  bool has_history() const { return stack_.history.has_value() && g_or_f_enabled_; }
  double history_kernel_l1(bool instant) const;

 private:
  PotentialStack stack_;
  GridSpec grid_;
  std::unique_ptr<FftConvolver> hartree_conv_;
  std::unique_ptr<FftConvolver> f_conv_;
  std::unique_ptr<FftConvolver> g_conv_;
  std::optional<MollifierKernel> mollifier_;
  RealField coulomb_raw_;
  RealField coulomb_effective_;
  bool g_or_f_enabled_ = false;
};

// ---------------------------------------------------------------------------
// Free operations (stateless wrappers over the evaluator caches)
// ---------------------------------------------------------------------------

// Discrete Hartree convolution with the truncated kernel; throws
// NegativeDensity if rho dips below -1e-12.
RealField hartree(const RealField& rho);

// lambda * rho^(alpha/2) pointwise; validates the parameter ranges.
RealField lda_potential(const RealField& rho, const LdaSpec& spec);

// Sum over ions of c_j / |x - x_j| with snapped centers; throws IonOnGridNode
// if a node ends up within 1e-9*h of an ion.
RealField coulomb_field(const IonSpec& ions, const GridSpec& grid);

// Instantaneous-plus-memory history potential; throws MissingHistory if the
// stored snapshots do not cover [0, t].
RealField history_potential(const HistorySpec& spec, const DensityHistory& history,
                            const RealField& rho_now, double t);

// Pointwise sum of the enabled components at time t.
RealField effective_potential(const PotentialStack& stack, const RealField& rho, double t,
                              const DensityHistory* history = nullptr);

}  // namespace tdks
