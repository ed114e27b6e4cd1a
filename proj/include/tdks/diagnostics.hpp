#pragma once

#include "tdks/propagator.hpp"

namespace tdks {

// Instantaneous energy functional
//   E(t) = int (hbar^2/4m)|grad Psi|^2
//        + (1/4 (W*rho) + 1/2 (V + Phi_corr)) rho,
// with Phi_corr the (possibly mollified) LDA + Coulomb + history correction.
// The identity fields of the returned record are initialized to the trivial
// values (rhs = E, residual = 0); trajectory-level bookkeeping fills them.
EnergyRecord energy(const OrbitalSet& psi, const PotentialStack& stack, double t,
                    const StepperConfig& cfg, const DensityHistory* history = nullptr);

// Per-step energy-balance residuals
//   residual_n = E(t_n) - E(0) - trapezoid of (1/2)<dV/ds + phi, rho(s)>,
// where phi is the rate of the time-history potential (exact memory rate plus
// a second-order difference of the cached instantaneous convolutions); phi is
// zero when the history term is disabled.
std::vector<double> energy_identity_residual(const Trajectory& traj, const PotentialStack& stack,
                                             const StepperConfig& cfg);

// Full ledger for a completed trajectory (charge, energy terms, balance
// columns, H1 seminorm per step).
EnergyLedger compute_ledger(const Trajectory& traj, const PotentialStack& stack,
                            const StepperConfig& cfg);

struct AprioriReport {
  double r_observed = 0.0;            // max over steps of the H1 seminorm
  std::vector<double> h1_norms;
  bool blow_up = false;               // any 10x growth over the run
};

AprioriReport apriori_bound_report(const Trajectory& traj);

// Smallness check for negatively-signed corrections: the LDA bound
//   C1_lda = |lambda| |Omega|^(2/3 - alpha/2) ||Psi0||_L2^alpha S^2
// with S the sampled discrete Sobolev constant (max L6 norm over random
// unit-H1 fields), plus the Coulomb contribution through the eta-split of the
// Schwarz/Young estimate. Pass iff the total stays below hbar^2/2m.
struct ConstraintReport {
  double c1_estimate = 0.0;
  double c2_estimate = 0.0;
  double c1_lda = 0.0;
  double sobolev_constant = 0.0;
  double eta = 0.0;
  double threshold = 0.0;  // hbar^2 / 2m
  bool pass = true;
  bool trivial = true;     // no negatively signed component present
};

ConstraintReport constraint_check(const OrbitalSet& psi0, const PotentialStack& stack,
                                  const StepperConfig& cfg);

}  // namespace tdks
