#include "vecbeam/phase_mask.hpp"

#include <cmath>

#include "vecbeam/errors.hpp"

namespace vecbeam {

double wrap_phase(double phase) {
  double w = std::fmod(phase, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  // fmod of a tiny negative number lands exactly on 2*pi after the shift.
  if (w >= kTwoPi) w = 0.0;
  return w;
}

double phase_distance(double a, double b) {
  double d = std::remainder(a - b, kTwoPi);
  if (d <= -kPi) d += kTwoPi;
  return d;
}

PhaseMask::PhaseMask(GridSpec grid) : grid_(grid), phase_(grid.size(), 0.0) {}

PhaseMask::PhaseMask(GridSpec grid, std::vector<double> phase, int levels)
    : grid_(grid), phase_(std::move(phase)), levels_(levels) {
  if (phase_.size() != grid_.size()) throw DomainError("phase raster size does not match grid");
  if (levels_ < 0) throw DomainError("quantization level count must be >= 0");
  for (auto& p : phase_) {
    if (!std::isfinite(p)) throw DomainError("phase mask contains a non-finite value");
    p = wrap_phase(p);
  }
  if (levels_ > 0) {
    const double step = kTwoPi / levels_;
    for (auto& p : phase_) {
      const double k = std::round(p / step);
      if (std::abs(p - k * step) > 1e-9) throw DomainError("phase is not on the quantization lattice");
      p = k >= levels_ ? 0.0 : k * step;
    }
  }
}

}  // namespace vecbeam
