#include "vecbeam/laguerre.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "vecbeam/errors.hpp"
#include "vecbeam/phase_mask.hpp"

namespace vecbeam {

double assoc_laguerre(int p, int a, double x) {
  if (p < 0 || a < 0) {
    throw DomainError("assoc_laguerre: indices must be non-negative (p=" + std::to_string(p) +
                      ", a=" + std::to_string(a) + ")");
  }
  double prev = 1.0;
  if (p == 0) return prev;
  double cur = 1.0 + a - x;
  for (int k = 1; k < p; ++k) {
    const double next = ((2.0 * k + 1.0 + a - x) * cur - (k + a) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

void LGModeSpec::validate() const {
  if (p < 0) throw DomainError("LG radial index p must be >= 0");
  if (!(w0 > 0.0)) throw DomainError("LG waist w0 must be > 0");
  if (!(wavelength > 0.0)) throw DomainError("wavelength must be > 0");
}

double LGModeSpec::rayleigh_range() const { return kPi * w0 * w0 / wavelength; }

double LGModeSpec::beam_radius() const {
  const double q = z / rayleigh_range();
  return w0 * std::sqrt(1.0 + q * q);
}

ScalarField lg_mode(const LGModeSpec& spec, const GridSpec& grid) {
  spec.validate();
  const int al = std::abs(spec.l);
  const double w = spec.beam_radius();
  const double zr = spec.rayleigh_range();
  const double k = kTwoPi / spec.wavelength;
  // 1 / R(z); zero at the waist.
  const double inv_r = spec.z == 0.0 ? 0.0 : spec.z / (spec.z * spec.z + zr * zr);
  const double gouy = (2.0 * spec.p + al + 1.0) * std::atan2(spec.z, zr);
  const double norm =
      std::sqrt(2.0 / kPi) * std::exp(0.5 * (std::lgamma(spec.p + 1.0) - std::lgamma(spec.p + al + 1.0))) / w;

  ScalarField out(grid);
  auto amps = out.amps();
  const int nx = grid.nx();
  const int ny = grid.ny();
#pragma omp parallel for schedule(static)
  for (int j = 0; j < ny; ++j) {
    const double y = grid.y(j);
    for (int i = 0; i < nx; ++i) {
      const double x = grid.x(i);
      const double r2 = x * x + y * y;
      const double s = r2 / (w * w);
      const double radial = norm * std::pow(std::sqrt(2.0 * s), al) * assoc_laguerre(spec.p, al, 2.0 * s) *
                            std::exp(-s);
      const double phase = spec.l * std::atan2(y, x) + 0.5 * k * r2 * inv_r - gouy;
      amps[grid.index(i, j)] = std::polar(radial, phase);
    }
  }
  out.mark_truncated(power(out) < 0.99);
  return out;
}

}  // namespace vecbeam
