#include "vecbeam/ring_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "vecbeam/errors.hpp"
#include "vecbeam/phase_mask.hpp"

namespace vecbeam {

std::vector<double> sample_ring(const RealRaster& raster, double radius, int samples) {
  const GridSpec& g = raster.grid;
  if (!(radius > 0.0) || samples < 8) throw PreconditionError("sample_ring: need radius > 0 and >= 8 samples");
  if (radius > 0.5 * (g.nx() - 1) * g.dx() || radius > 0.5 * (g.ny() - 1) * g.dy()) {
    throw PreconditionError("sample_ring: ring of radius " + std::to_string(radius) + " m leaves the grid");
  }
  std::vector<double> out(samples);
  for (int s = 0; s < samples; ++s) {
    const double phi = kTwoPi * s / samples;
    const double fi = radius * std::cos(phi) / g.dx() + 0.5 * (g.nx() - 1);
    const double fj = radius * std::sin(phi) / g.dy() + 0.5 * (g.ny() - 1);
    const int i0 = std::clamp(static_cast<int>(std::floor(fi)), 0, g.nx() - 2);
    const int j0 = std::clamp(static_cast<int>(std::floor(fj)), 0, g.ny() - 2);
    const double tx = fi - i0;
    const double ty = fj - j0;
    out[s] = (1 - tx) * (1 - ty) * raster(i0, j0) + tx * (1 - ty) * raster(i0 + 1, j0) +
             (1 - tx) * ty * raster(i0, j0 + 1) + tx * ty * raster(i0 + 1, j0 + 1);
  }
  return out;
}

std::vector<Complex> azimuthal_harmonics(const std::vector<double>& ring, int max_harmonic) {
  const auto n = ring.size();
  std::vector<Complex> c(max_harmonic + 1);
  for (int m = 0; m <= max_harmonic; ++m) {
    Complex acc{};
    for (std::size_t s = 0; s < n; ++s) acc += ring[s] * std::polar(1.0, -kTwoPi * m * double(s) / double(n));
    c[m] = acc / double(n);
  }
  return c;
}

int dominant_harmonic(const std::vector<Complex>& harmonics) {
  int best = 1;
  for (int m = 1; m < static_cast<int>(harmonics.size()); ++m) {
    if (std::norm(harmonics[m]) > std::norm(harmonics[best])) best = m;
  }
  return best;
}

double harmonic_contrast(const std::vector<Complex>& harmonics) {
  const int best = dominant_harmonic(harmonics);
  double runner_up = 0.0;
  for (int m = 1; m < static_cast<int>(harmonics.size()); ++m) {
    if (m != best) runner_up = std::max(runner_up, std::norm(harmonics[m]));
  }
  return runner_up > 0.0 ? std::norm(harmonics[best]) / runner_up : INFINITY;
}

int count_azimuthal_maxima(const std::vector<double>& ring, double relative_prominence) {
  const auto n = static_cast<long>(ring.size());
  if (n < 3) throw PreconditionError("count_azimuthal_maxima: profile too short");
  const auto [lo_it, hi_it] = std::minmax_element(ring.begin(), ring.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  const double mean = std::accumulate(ring.begin(), ring.end(), 0.0) / double(n);
  const double scale = std::max(std::abs(hi), std::abs(lo));
  if (!(std::abs(mean) > 1e-12 * std::max(scale, 1e-300)) || scale == 0.0) {
    throw PreconditionError("count_azimuthal_maxima: near-zero mean intensity on the ring");
  }
  if (hi - lo <= 1e-9 * scale) throw PreconditionError("count_azimuthal_maxima: flat ring, count undefined");

  auto at = [&](long k) { return ring[static_cast<std::size_t>(((k % n) + n) % n)]; };
  const double threshold = relative_prominence * (hi - lo);
  // Interpolated rings often split a crest into twin maxima of equal height.
  // A tie counts as higher only to the left, so exactly one twin survives.
  const double tie = 1e-12 * scale;
  int count = 0;
  for (long k = 0; k < n; ++k) {
    const double peak = at(k);
    if (!(peak > at(k - 1) && peak >= at(k + 1))) continue;
    double left_min = peak;
    for (long s = 1; s < n; ++s) {
      const double v = at(k - s);
      if (v >= peak - tie && s > 1) break;
      left_min = std::min(left_min, v);
    }
    double right_min = peak;
    for (long s = 1; s < n; ++s) {
      const double v = at(k + s);
      if (v > peak + tie) break;
      right_min = std::min(right_min, v);
    }
    if (peak - std::max(left_min, right_min) >= threshold) ++count;
  }
  return count;
}

double lobe_azimuth(const std::vector<double>& ring, int harmonic) {
  const auto c = azimuthal_harmonics(ring, harmonic);
  return -std::arg(c[harmonic]) / harmonic;
}

LobeRotation lobe_rotation(const RealRaster& raster, double inner_radius, double outer_radius) {
  constexpr int kMaxHarmonic = 16;
  const auto inner = azimuthal_harmonics(sample_ring(raster, inner_radius), kMaxHarmonic);
  const auto outer = azimuthal_harmonics(sample_ring(raster, outer_radius), kMaxHarmonic);
  const int m = dominant_harmonic(outer);
  // c_m ~ exp(-i m phi0): the lobe shift is minus the phase difference over m.
  const double dphase = std::arg(outer[m] * std::conj(inner[m]));
  return {m, -dphase / m};
}

}  // namespace vecbeam
