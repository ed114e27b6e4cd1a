#include "tdks/potentials.hpp"

#include <algorithm>
#include <cmath>

#include "tdks/norms.hpp"

namespace tdks {

// ---------------------------------------------------------------------------
// External potential catalogue
// ---------------------------------------------------------------------------

double ExternalPotentialSpec::value(const GridSpec& grid, double x, double y, double z,
                                    double t) const {
  switch (kind) {
    case Kind::zero:
      return 0.0;
    case Kind::harmonic: {
      auto c = grid.center();
      double dx = x - c[0], dy = y - c[1], dz = z - c[2];
      return 0.5 * omega2 * (dx * dx + dy * dy + dz * dz);
    }
    case Kind::dipole_pulse: {
      double zc = z - grid.center()[2];
      double u = (t - 2.0 * width) / width;
      return amplitude * zc * std::sin(frequency * t) * std::exp(-0.5 * u * u);
    }
  }
  return 0.0;
}

double ExternalPotentialSpec::time_derivative(const GridSpec& grid, double x, double y, double z,
                                              double t) const {
  (void)x;
  (void)y;
  switch (kind) {
    case Kind::zero:
    case Kind::harmonic:
      return 0.0;
    case Kind::dipole_pulse: {
      double zc = z - grid.center()[2];
      double u = (t - 2.0 * width) / width;
      double env = std::exp(-0.5 * u * u);
      double rate = frequency * std::cos(frequency * t) - std::sin(frequency * t) * u / width;
      return amplitude * zc * rate * env;
    }
  }
  return 0.0;
}

namespace {
template <typename F>
RealField tabulate(const GridSpec& grid, F&& f) {
  RealField out(grid);
  for (int i = 0; i < grid.points[0]; ++i) {
    double x = grid.position(0, i);
    for (int j = 0; j < grid.points[1]; ++j) {
      double y = grid.position(1, j);
      for (int k = 0; k < grid.points[2]; ++k)
        out.values[std::size_t(grid.index(i, j, k))] = f(x, y, grid.position(2, k));
    }
  }
  return out;
}
}  // namespace

RealField ExternalPotentialSpec::evaluate(const GridSpec& grid, double t) const {
  if (kind == Kind::zero) return RealField(grid);
  return tabulate(grid, [&](double x, double y, double z) { return value(grid, x, y, z, t); });
}

RealField ExternalPotentialSpec::evaluate_time_derivative(const GridSpec& grid, double t) const {
  if (is_static()) return RealField(grid);
  return tabulate(grid,
                  [&](double x, double y, double z) { return time_derivative(grid, x, y, z, t); });
}

// ---------------------------------------------------------------------------
// LDA
// ---------------------------------------------------------------------------

void validate_lda_params(const LdaSpec& spec) {
  if (!std::isfinite(spec.lambda) || !std::isfinite(spec.alpha))
    fail(errc::invalid_lda_params, "lda parameters must be finite");
  if (spec.lambda == 0.0) return;
  if (spec.alpha < 1.0)
    fail(errc::invalid_lda_params, "lda exponent range: alpha >= 1 is required");
  if (spec.lambda > 0.0) {
    if (!(spec.alpha < 4.0))
      fail(errc::invalid_lda_params,
           "lda exponent range: lambda > 0 requires alpha < 4 (strict)");
  } else {
    if (spec.alpha > 4.0 / 3.0)
      fail(errc::invalid_lda_params,
           "lda exponent range: lambda < 0 requires alpha <= 4/3");
  }
}

RealField lda_potential(const RealField& rho, const LdaSpec& spec) {
  validate_lda_params(spec);
  RealField out(rho.grid);
  if (!spec.enabled()) return out;
  const double half_alpha = 0.5 * spec.alpha;
  for (std::size_t i = 0; i < rho.values.size(); ++i) {
    double r = std::max(rho.values[i], 0.0);
    out.values[i] = spec.lambda * std::pow(r, half_alpha);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Coulomb ions
// ---------------------------------------------------------------------------

std::array<double, 3> snapped_center(const GridSpec& grid, const std::array<double, 3>& x) {
  // Nearest cell-center-offset position (odd multiple of h/2), which keeps
  // every grid node at least half a spacing away along each axis.
  std::array<double, 3> out{};
  for (int a = 0; a < 3; ++a) {
    double h = grid.spacing(a);
    double snapped = (std::round(x[a] / h - 0.5) + 0.5) * h;
    snapped = std::clamp(snapped, 0.5 * h, grid.extent[a] - 0.5 * h);
    out[a] = snapped;
  }
  return out;
}

void validate_ion_spec(const IonSpec& spec, const GridSpec& grid) {
  for (const auto& ion : spec.ions) {
    for (int a = 0; a < 3; ++a) {
      double h = grid.spacing(a);
      if (ion.center[a] < h || ion.center[a] > grid.extent[a] - h)
        fail(errc::validation_error,
             "ion placement: centers must sit at least one grid spacing inside the boundary");
    }
    if (!std::isfinite(ion.charge)) fail(errc::validation_error, "ion charge must be finite");
  }
}

RealField coulomb_field(const IonSpec& ions, const GridSpec& grid) {
  RealField out(grid);
  if (!ions.enabled()) return out;
  validate_ion_spec(ions, grid);
  const double r_min = 1e-9 * grid.min_spacing();
  for (const auto& ion : ions.ions) {
    auto c = snapped_center(grid, ion.center);
    for (int i = 0; i < grid.points[0]; ++i) {
      double dx = grid.position(0, i) - c[0];
      for (int j = 0; j < grid.points[1]; ++j) {
        double dy = grid.position(1, j) - c[1];
        for (int k = 0; k < grid.points[2]; ++k) {
          double dz = grid.position(2, k) - c[2];
          double r = std::sqrt(dx * dx + dy * dy + dz * dz);
          if (r < r_min)
            fail(errc::ion_on_grid_node, "a grid node coincides with an ion center");
          out.values[std::size_t(grid.index(i, j, k))] += ion.charge / r;
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Time history
// ---------------------------------------------------------------------------

void validate_history_spec(const HistorySpec& spec, const GridSpec& grid) {
  if (!(spec.tau_memory > 0.0))
    fail(errc::validation_error, "history memory time constant must be positive");
  for (const auto* k : {&spec.instant, &spec.memory}) {
    if (!k->enabled()) continue;
    if (!(k->radius > 0.0) || k->radius >= grid.diameter())
      fail(errc::validation_error,
           "history kernel support must be positive and smaller than the box diameter");
    if (!std::isfinite(k->amplitude))
      fail(errc::validation_error, "history kernel amplitude must be finite");
  }
}

void DensityHistory::append(Entry e) {
  if (!entries_.empty() && !(e.t > entries_.back().t))
    fail(errc::invalid_argument, "history times must be strictly increasing");
  entries_.push_back(std::move(e));
}

// ---------------------------------------------------------------------------
// Stack
// ---------------------------------------------------------------------------

void validate_stack(const PotentialStack& stack, const GridSpec& grid) {
  validate_lda_params(stack.lda);
  validate_ion_spec(stack.ions, grid);
  if (stack.history) validate_history_spec(*stack.history, grid);
  if (stack.epsilon < 0.0) fail(errc::validation_error, "smoothing width must be nonnegative");
  if (stack.epsilon > 0.0 && stack.epsilon < 2.0 * grid.max_spacing() * (1.0 - 1e-12))
    fail(errc::kernel_underresolved, "smoothing width must be zero or at least 2h");
}

PotentialStack smooth_stack(const PotentialStack& stack) {
  if (!(stack.epsilon > 0.0))
    fail(errc::invalid_argument, "smooth_stack requires a positive smoothing width");
  return stack;  // evaluators route LDA and Coulomb through the mollifier when epsilon > 0
}

// ---------------------------------------------------------------------------
// Evaluator
// ---------------------------------------------------------------------------

PotentialEvaluator::PotentialEvaluator(const PotentialStack& stack, const GridSpec& grid)
    : stack_(stack), grid_(grid) {
  validate_stack(stack_, grid_);
  hartree_conv_ = std::make_unique<FftConvolver>(grid_, hartree_kernel(grid_));
  if (stack_.smoothed()) mollifier_ = MollifierKernel::make(grid_, stack_.epsilon);
  coulomb_raw_ = coulomb_field(stack_.ions, grid_);
  coulomb_effective_ =
      (stack_.smoothed() && stack_.ions.enabled()) ? mollifier_->apply(coulomb_raw_) : coulomb_raw_;
  if (stack_.history) {
    const auto& h = *stack_.history;
    if (h.instant.enabled())
      f_conv_ = std::make_unique<FftConvolver>(grid_,
                                               bump_kernel(h.instant.amplitude, h.instant.radius));
    if (h.memory.enabled())
      g_conv_ = std::make_unique<FftConvolver>(grid_,
                                               bump_kernel(h.memory.amplitude, h.memory.radius));
    g_or_f_enabled_ = h.instant.enabled() || h.memory.enabled();
  }
}

RealField PotentialEvaluator::hartree(const RealField& rho) const {
  for (double v : rho.values)
    if (v < -1e-12)
      fail(errc::negative_density, "hartree input density has a negative value");
  return hartree_conv_->convolve(rho);
}

RealField PotentialEvaluator::lda_term(const RealField& rho) const {
  RealField raw = lda_potential(rho, stack_.lda);
  if (stack_.smoothed() && stack_.lda.enabled()) return mollifier_->apply(raw);
  return raw;
}

const RealField& PotentialEvaluator::coulomb_term() const { return coulomb_effective_; }
const RealField& PotentialEvaluator::coulomb_unsmoothed() const { return coulomb_raw_; }

RealField PotentialEvaluator::f_convolve(const RealField& rho) const {
  if (!f_conv_) return RealField(grid_);
  return f_conv_->convolve(rho);
}

RealField PotentialEvaluator::g_convolve(const RealField& rho) const {
  if (!g_conv_) return RealField(grid_);
  return g_conv_->convolve(rho);
}

double PotentialEvaluator::history_kernel_l1(bool instant) const {
  const FftConvolver* c = instant ? f_conv_.get() : g_conv_.get();
  return c ? c->kernel_l1() : 0.0;
}

namespace {
// Left-endpoint weights over the stored step times covering [0, t]: each
// stored time s_k < t contributes width min(s_{k+1}, t) - s_k.
void check_history_coverage(const DensityHistory& history, double t) {
  (void)t;
  if (history.empty())
    fail(errc::missing_history, "no stored density snapshots");
  if (history.entries().front().t > 1e-14)
    fail(errc::missing_history, "density history must start at t = 0");
}
}  // namespace

RealField PotentialEvaluator::history_term(const RealField& rho_now, double t,
                                           const DensityHistory& history) const {
  const auto& spec = *stack_.history;
  RealField out(grid_);
  if (spec.instant.enabled()) out = f_conv_->convolve(rho_now);
  if (spec.memory.enabled() && t > 0.0) {
    check_history_coverage(history, t);
    const auto& entries = history.entries();
    for (std::size_t k = 0; k < entries.size() && entries[k].t < t; ++k) {
      double next = (k + 1 < entries.size()) ? std::min(entries[k + 1].t, t) : t;
      double width = next - entries[k].t;
      if (width <= 0.0) continue;
      axpy(width * spec.kappa(t - entries[k].t), entries[k].g_conv, out);
    }
  }
  return out;
}

RealField PotentialEvaluator::history_memory_rate(double t, const DensityHistory& history) const {
  const auto& spec = *stack_.history;
  RealField out(grid_);
  if (!spec.memory.enabled()) return out;
  check_history_coverage(history, t);
  const auto& entries = history.entries();
  // d/dt [ sum_k w_k(t) kappa(t - s_k) G*rho(s_k) ]: the live interval's
  // weight grows at unit rate, stored widths decay through kappa'.
  for (std::size_t k = 0; k < entries.size() && entries[k].t <= t + 1e-15; ++k) {
    double next = (k + 1 < entries.size()) ? std::min(entries[k + 1].t, t) : t;
    double width = std::max(next - entries[k].t, 0.0);
    double u = t - entries[k].t;
    double coeff = width * spec.kappa_rate(u);
    // The interval containing t is the one whose width still grows with t.
    bool live = (k + 1 == entries.size()) || (entries[k + 1].t > t + 1e-15);
    if (live) coeff += spec.kappa(u);
    if (coeff != 0.0) axpy(coeff, entries[k].g_conv, out);
  }
  return out;
}

RealField PotentialEvaluator::correction_field(const RealField& rho, double t,
                                               const DensityHistory* history) const {
  RealField out(grid_);
  if (stack_.lda.enabled()) out = lda_term(rho);
  if (stack_.ions.enabled()) axpy(1.0, coulomb_effective_, out);
  if (has_history()) {
    if (!history) fail(errc::missing_history, "history-enabled stack evaluated without snapshots");
    axpy(1.0, history_term(rho, t, *history), out);
  }
  return out;
}

RealField PotentialEvaluator::evaluate(const RealField& rho, double t,
                                       const DensityHistory* history) const {
  RealField out = stack_.external.evaluate(grid_, t);
  axpy(1.0, hartree(rho), out);
  axpy(1.0, correction_field(rho, t, history), out);
  return out;
}

// ---------------------------------------------------------------------------
// Stateless wrappers
// ---------------------------------------------------------------------------

RealField hartree(const RealField& rho) {
  for (double v : rho.values)
    if (v < -1e-12)
      fail(errc::negative_density, "hartree input density has a negative value");
  FftConvolver conv(rho.grid, hartree_kernel(rho.grid));
  return conv.convolve(rho);
}

RealField history_potential(const HistorySpec& spec, const DensityHistory& history,
                            const RealField& rho_now, double t) {
  PotentialStack stack;
  stack.history = spec;
  PotentialEvaluator ev(stack, rho_now.grid);
  return ev.history_term(rho_now, t, history);
}

RealField effective_potential(const PotentialStack& stack, const RealField& rho, double t,
                              const DensityHistory* history) {
  PotentialEvaluator ev(stack, rho.grid);
  return ev.evaluate(rho, t, history);
}

}  // namespace tdks
