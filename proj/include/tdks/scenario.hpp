#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tdks/propagator.hpp"

namespace tdks {

// Initial-state catalogue: product-sine box eigenmodes and Gaussians with an
// optional plane-wave phase, sampled on the interior lattice (hence zero on
// the boundary) and normalized orbital-by-orbital.
struct InitialStateSpec {
  enum class Kind { eigenmode, gaussian };
  Kind kind = Kind::eigenmode;

  struct Eigenmode {
    std::array<int, 3> k{1, 1, 1};
  };
  struct Gaussian {
    std::array<double, 3> center_fraction{0.5, 0.5, 0.5};
    double width = 0.1;                       // length units
    std::array<double, 3> momentum{0, 0, 0};  // plane-wave phase exp(i p.x)
  };

  std::vector<Eigenmode> eigenmodes;
  std::vector<Gaussian> gaussians;

  int orbital_count() const {
    return kind == Kind::eigenmode ? int(eigenmodes.size()) : int(gaussians.size());
  }
};

// Everything a run needs, round-trippable through the flat key-value scenario
// file format.
struct Scenario {
  GridSpec grid;
  StepperConfig stepper;
  double total_time = 0.0;
  PotentialStack stack;
  // epsilon may be given in the file as a multiple of the max grid spacing
  // ("4h") or as an absolute length; the resolved value lives in stack.epsilon.
  InitialStateSpec initial;
  std::uint64_t seed = 0;

  std::string digest() const;
};

// Parses the flat key-value text. Throws ParseError with line/column.
Scenario parse_scenario(const std::string& text, const std::string& origin = "<string>");
Scenario load_scenario(const std::string& path);
std::string save_scenario(const Scenario& s);

// Enforces the parameter gates (LDA ranges, ion placement, epsilon >= 2h or
// zero, step sanity) and runs the smallness check when lambda < 0. Throws
// ValidationError naming the first violated constraint.
void validate_scenario(const Scenario& s);

OrbitalSet build_initial_state(const Scenario& s);
RunSpec make_run_spec(const Scenario& s);

bool scenario_equal(const Scenario& a, const Scenario& b);

}  // namespace tdks
