#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tdks/potentials.hpp"

namespace tdks {

struct StepperConfig {
  double dt = 0.005;
  double picard_tol = 1e-10;
  int picard_max = 50;
  double linear_tol = 1e-11;
  double hbar = 1.0;
  double mass = 1.0;
};

struct EnergyRecord {
  double t = 0.0;
  double charge = 0.0;
  double kinetic = 0.0;
  double hartree_term = 0.0;
  double external_term = 0.0;
  double correction_term = 0.0;
  double e_total = 0.0;
  double identity_rhs = 0.0;
  double identity_residual = 0.0;
  double h1_norm = 0.0;
};

using EnergyLedger = std::vector<EnergyRecord>;

struct TrajectorySnapshot {
  double t;
  OrbitalSet state;
};

struct Trajectory {
  std::vector<TrajectorySnapshot> snapshots;
  EnergyLedger ledger;
  std::string config_digest;
  std::vector<std::string> warnings;
};

// H psi = -(hbar^2/2m) lap(psi) + ve .* psi, orbital by orbital.
OrbitalSet hamiltonian_apply(const OrbitalSet& psi, const RealField& ve, const StepperConfig& cfg);
ComplexField hamiltonian_apply(const ComplexField& psi, const RealField& ve,
                               const StepperConfig& cfg);

struct StepStats {
  int picard_sweeps = 0;
  long cg_iterations = 0;
};

// Norm-conserving midpoint step with successive-approximation resolution of
// the density dependence:
//   (I + i dt/(2 hbar) H[V_mid]) psi_next = (I - i dt/(2 hbar) H[V_mid]) psi,
// V_mid evaluated at t + dt/2 with density (rho_n + rho_{n+1})/2. The inner
// solve runs conjugate gradients on the Hermitian normal form I + mu^2 H^2.
class Stepper {
 public:
  Stepper(const PotentialStack& stack, const GridSpec& grid, const StepperConfig& cfg);

  // Advances one step of width dt (from cfg unless overridden). Throws
  // PicardDivergence / LinearSolveFailure. Does not touch the history buffer.
  OrbitalSet step(const OrbitalSet& psi, double t, double dt, StepStats* stats = nullptr) const;

  // Appends (t, rho) with cached kernel convolutions to the history buffer.
  void record_history(double t, const RealField& rho);
  void seed_history(const OrbitalSet& psi0);

  const DensityHistory& history() const { return history_; }
  const PotentialEvaluator& evaluator() const { return evaluator_; }
  const StepperConfig& config() const { return cfg_; }

 private:
  PotentialEvaluator evaluator_;
  StepperConfig cfg_;
  DensityHistory history_;
};

// One midpoint step against a frozen potential field (no density feedback).
// dt may be negative (time reversal).
OrbitalSet cn_step_frozen(const OrbitalSet& psi, const RealField& ve, double dt,
                          const StepperConfig& cfg);

// Single self-consistent step with fresh caches; history, if enabled, is
// seeded at t_n only.
OrbitalSet cn_step(const OrbitalSet& psi, const PotentialStack& stack, double t,
                   const StepperConfig& cfg);

struct RunSpec {
  GridSpec grid;
  PotentialStack stack;
  OrbitalSet psi0;
  StepperConfig cfg;
  double total_time = 0.0;
  std::uint64_t seed = 0;
  std::string digest;
};

// Advances ceil(T/dt) steps from psi0 and fills the energy ledger. On
// PicardDivergence a step is retried once as two half steps (both recorded as
// accepted steps) and a warning is logged. Deterministic given the spec.
Trajectory run(const RunSpec& spec);

// Max over random unit-H1 real test fields and interior snapshot times of
// | i hbar <(psi_{n+1}-psi_{n-1})/(2 dt), zeta>
//   - (hbar^2/2m) <grad psi_n, grad zeta> - <V_e^n psi_n, zeta> |.
double weak_residual(const Trajectory& traj, const PotentialStack& stack, int num_test,
                     std::uint64_t seed, const StepperConfig& cfg);

// Rebuilds the density history a completed trajectory would have accumulated
// (used by post-processing diagnostics).
DensityHistory rebuild_history(const PotentialEvaluator& evaluator, const Trajectory& traj);

}  // namespace tdks
