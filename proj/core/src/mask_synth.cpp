#include "vecbeam/mask_synth.hpp"

#include <cmath>
#include <cstdlib>

#include "vecbeam/errors.hpp"
#include "vecbeam/laguerre.hpp"

namespace vecbeam {

PhaseMask lg_phase_mask(int p, int l, double w0, const GridSpec& grid) {
  if (p < 0) throw DomainError("lg_phase_mask: p must be >= 0");
  if (!(w0 > 0.0)) throw DomainError("lg_phase_mask: w0 must be > 0");
  const int al = std::abs(l);
  std::vector<double> phase(grid.size());
  for (int j = 0; j < grid.ny(); ++j) {
    const double y = grid.y(j);
    for (int i = 0; i < grid.nx(); ++i) {
      const double x = grid.x(i);
      const double u = 2.0 * (x * x + y * y) / (w0 * w0);
      double ph = l == 0 ? 0.0 : l * std::atan2(y, x);
      if (p > 0 && assoc_laguerre(p, al, u) < 0.0) ph += kPi;
      phase[grid.index(i, j)] = ph;
    }
  }
  return PhaseMask(grid, std::move(phase));
}

PhaseMask kinoform_lens(double focal_length, double wavelength, const GridSpec& grid) {
  if (!(wavelength > 0.0)) throw DomainError("kinoform_lens: wavelength must be > 0");
  if (focal_length == 0.0 || !std::isfinite(focal_length)) {
    throw DomainError("kinoform_lens: focal length must be finite and non-zero");
  }
  const double scale = -kPi / (wavelength * focal_length);
  std::vector<double> phase(grid.size());
  for (int j = 0; j < grid.ny(); ++j) {
    const double y = grid.y(j);
    for (int i = 0; i < grid.nx(); ++i) {
      const double x = grid.x(i);
      phase[grid.index(i, j)] = scale * (x * x + y * y);
    }
  }
  return PhaseMask(grid, std::move(phase));
}

PhaseMask combine(std::span<const PhaseMask> masks) {
  if (masks.empty()) throw DomainError("combine: no masks given");
  const GridSpec& grid = masks.front().grid();
  std::vector<double> sum(grid.size(), 0.0);
  for (const auto& m : masks) {
    require_same_grid(grid, m.grid(), "combine");
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += m.phase()[k];
  }
  return PhaseMask(grid, std::move(sum));
}

PhaseMask combine(std::initializer_list<PhaseMask> masks) {
  return combine(std::span<const PhaseMask>(masks.begin(), masks.size()));
}

PhaseMask negate(const PhaseMask& mask) {
  std::vector<double> phase(mask.phase());
  for (auto& p : phase) p = -p;
  return PhaseMask(mask.grid(), std::move(phase));
}

PhaseMask add_constant(const PhaseMask& mask, double offset) {
  std::vector<double> phase(mask.phase());
  for (auto& p : phase) p += offset;
  return PhaseMask(mask.grid(), std::move(phase));
}

PhaseMask quantize(const PhaseMask& mask, int levels) {
  if (levels < 2) throw DomainError("quantize: need at least 2 levels");
  const double step = kTwoPi / levels;
  std::vector<double> phase(mask.phase());
  for (auto& p : phase) {
    const double k = std::round(p / step);
    p = k >= levels ? 0.0 : k * step;
  }
  return PhaseMask(mask.grid(), std::move(phase), levels);
}

}  // namespace vecbeam
