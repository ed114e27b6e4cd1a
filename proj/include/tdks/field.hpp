#pragma once

#include <complex>
#include <vector>

#include "tdks/grid.hpp"

namespace tdks {

using cplx = std::complex<double>;

// Real scalar field on the interior nodes (densities, potentials).
struct RealField {
  GridSpec grid;
  std::vector<double> values;

  RealField() = default;
  explicit RealField(const GridSpec& g) : grid(g), values(std::size_t(g.total()), 0.0) {}
  RealField(const GridSpec& g, std::vector<double> v) : grid(g), values(std::move(v)) {
    if (std::int64_t(values.size()) != g.total())
      fail(errc::invalid_argument, "field size does not match grid");
  }

  double& at(int i, int j, int k) { return values[std::size_t(grid.index(i, j, k))]; }
  double at(int i, int j, int k) const { return values[std::size_t(grid.index(i, j, k))]; }
  std::size_t size() const { return values.size(); }
};

// Complex amplitude field for one orbital.
struct ComplexField {
  GridSpec grid;
  std::vector<cplx> values;

  ComplexField() = default;
  explicit ComplexField(const GridSpec& g) : grid(g), values(std::size_t(g.total()), cplx{}) {}
  ComplexField(const GridSpec& g, std::vector<cplx> v) : grid(g), values(std::move(v)) {
    if (std::int64_t(values.size()) != g.total())
      fail(errc::invalid_argument, "field size does not match grid");
  }

  cplx& at(int i, int j, int k) { return values[std::size_t(grid.index(i, j, k))]; }
  cplx at(int i, int j, int k) const { return values[std::size_t(grid.index(i, j, k))]; }
  std::size_t size() const { return values.size(); }
};

// The state Psi = {psi_1, ..., psi_N} at one instant.
struct OrbitalSet {
  std::vector<ComplexField> orbitals;
  double t = 0.0;

  OrbitalSet() = default;
  OrbitalSet(std::vector<ComplexField> orbs, double time) : orbitals(std::move(orbs)), t(time) {
    if (orbitals.empty()) fail(errc::invalid_argument, "orbital set needs at least one orbital");
    for (const auto& o : orbitals)
      if (!(o.grid == orbitals.front().grid))
        fail(errc::invalid_argument, "all orbitals must share one grid");
  }

  const GridSpec& grid() const { return orbitals.front().grid; }
  int count() const { return int(orbitals.size()); }
};

bool all_finite(const RealField& f);
bool all_finite(const ComplexField& f);
bool all_finite(const OrbitalSet& s);

}  // namespace tdks
