#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tdks/scenario.hpp"

namespace tdks {

// Scripted studies realizing the model's guarantees as measurable trends.
struct StudyReport {
  std::string kind;
  std::string scenario_digest;
  std::vector<std::pair<std::string, double>> table;  // (parameter, metric) rows
  bool pass = false;
  std::string detail;
  double runtime_seconds = 0.0;  // excluded from determinism comparisons
};

// Runs the scenario once per epsilon (decreasing ladder, >= 3 values, all
// >= 2h) and reports, for each consecutive pair, the max-over-time H1 distance
// of the states and the max H^-1 distance of centered-difference time
// derivatives. PASS iff both sequences strictly decrease.
StudyReport epsilon_convergence_study(const Scenario& scenario, std::vector<double> eps_list);

// Paired runs from psi0 and a delta-perturbed copy (random unit-H1 direction,
// total charge renormalized). Reports the separation growth
// g(t) = ||Psi1 - Psi2||_H1(t) / ||Psi1 - Psi2||_H1(0) per trial and fits
// log g ~ K t; PASS iff the growth stays within the fitted exponential
// envelope (at-most-exponential separation). delta = 0 runs the pair
// unperturbed and checks bitwise coincidence.
StudyReport stability_study(const Scenario& scenario, double delta, int trials);

// Halving-ladder self-convergence of the final state; PASS iff the observed
// order sits in [1.7, 2.3]. Throws InsufficientLadder for fewer than 3 dts.
StudyReport dt_refinement_study(const Scenario& scenario, std::vector<double> dt_list);

// Randomized check of the two scalar inequalities behind the LDA Lipschitz
// estimates:
//   ((y^r - z^r)/(y^s - z^s) * s/r)^(1/(r-s)) <= max(y,z)
//   | |a|^alpha - |b|^alpha | <= alpha * max(|a|,|b|)^(alpha-1) * ||a|-|b||
// over the stated sample ranges, slack 1e-12 * scale. PASS iff no violations.
StudyReport inequality_suite(long samples, std::uint64_t seed);

}  // namespace tdks
