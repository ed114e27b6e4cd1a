#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "tdks/errors.hpp"

namespace tdks {

// Uniform tensor grid over the box (0,L1)x(0,L2)x(0,L3) with homogeneous
// Dirichlet boundary. Only interior points are stored; the boundary layer is
// an implicit ghost ring of zeros. Interior node i on axis a sits at
// (i+1)*spacing(a), so spacing(a) = extent[a] / (points[a] + 1) exactly.
struct GridSpec {
  std::array<double, 3> extent{1.0, 1.0, 1.0};
  std::array<int, 3> points{8, 8, 8};

  static GridSpec make(std::array<double, 3> extent, std::array<int, 3> points) {
    for (int a = 0; a < 3; ++a) {
      if (!(extent[a] > 0.0) || !std::isfinite(extent[a]))
        fail(errc::validation_error, "grid extent must be a positive finite length");
      if (points[a] < 8)
        fail(errc::validation_error, "grid needs at least 8 interior points per axis");
    }
    return GridSpec{extent, points};
  }

  double spacing(int axis) const { return extent[axis] / (points[axis] + 1); }
  double max_spacing() const {
    return std::max({spacing(0), spacing(1), spacing(2)});
  }
  double min_spacing() const {
    return std::min({spacing(0), spacing(1), spacing(2)});
  }
  double cell_volume() const { return spacing(0) * spacing(1) * spacing(2); }
  double volume() const { return extent[0] * extent[1] * extent[2]; }
  double diameter() const {
    return std::sqrt(extent[0] * extent[0] + extent[1] * extent[1] + extent[2] * extent[2]);
  }

  std::int64_t total() const {
    return std::int64_t(points[0]) * points[1] * points[2];
  }
  // Interior coordinate of node index (0-based) on an axis.
  double position(int axis, int index) const { return spacing(axis) * (index + 1); }
  std::array<double, 3> center() const {
    return {0.5 * extent[0], 0.5 * extent[1], 0.5 * extent[2]};
  }

  std::int64_t index(int i, int j, int k) const {
    return (std::int64_t(i) * points[1] + j) * points[2] + k;
  }

  bool operator==(const GridSpec&) const = default;
};

}  // namespace tdks
