#pragma once

#include <vector>

#include "vecbeam/grid.hpp"

namespace vecbeam {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Wraps any phase into [0, 2*pi).
double wrap_phase(double phase);

/// Shortest signed distance between two phases, in (-pi, pi].
double phase_distance(double a, double b);

/// Phase raster as displayed by the SLM. Stored phases are always in
/// [0, 2*pi); `levels > 0` means every phase is a multiple of 2*pi/levels.
class PhaseMask {
 public:
  /// All-zero continuous mask.
  explicit PhaseMask(GridSpec grid);
  /// Wraps `phase` into [0, 2*pi). Throws DomainError if the size mismatches
  /// the grid, or if `levels > 0` and a phase is off the level lattice.
  PhaseMask(GridSpec grid, std::vector<double> phase, int levels = 0);

  const GridSpec& grid() const { return grid_; }
  const std::vector<double>& phase() const { return phase_; }
  double operator()(int i, int j) const { return phase_[grid_.index(i, j)]; }
  int levels() const { return levels_; }

 private:
  GridSpec grid_;
  std::vector<double> phase_;
  int levels_ = 0;
};

}  // namespace vecbeam
