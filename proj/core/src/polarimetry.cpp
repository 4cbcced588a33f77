#include "vecbeam/polarimetry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vecbeam/errors.hpp"

namespace vecbeam {

StokesMaps stokes_direct(const VectorField& f) {
  StokesMaps s(f.grid());
  auto h = f.h().amps();
  auto v = f.v().amps();
  for (std::size_t k = 0; k < h.size(); ++k) {
    const double ih = std::norm(h[k]);
    const double iv = std::norm(v[k]);
    const Complex cross = h[k] * std::conj(v[k]);
    s.s0.values[k] = ih + iv;
    s.s1.values[k] = ih - iv;
    s.s2.values[k] = 2.0 * cross.real();
    s.s3.values[k] = 2.0 * cross.imag();
  }
  return s;
}

std::vector<double> uniform_qwp_angles(int n, double offset) {
  if (n < 1) throw DomainError("uniform_qwp_angles: n must be >= 1");
  std::vector<double> angles(n);
  for (int k = 0; k < n; ++k) angles[k] = offset + kPi * k / n;
  return angles;
}

FrameStack simulate_qwp_scan(const VectorField& f, std::span<const double> angles) {
  FrameStack stack;
  stack.angles.assign(angles.begin(), angles.end());
  stack.frames.reserve(angles.size());
  for (double theta : angles) {
    // Only the H row of polarizer(0) * QWP(theta) reaches the camera.
    const JonesMatrix m = quarter_wave_plate(theta);
    RealRaster frame(f.grid());
    auto h = f.h().amps();
    auto v = f.v().amps();
    for (std::size_t k = 0; k < h.size(); ++k) frame.values[k] = std::norm(m.hh * h[k] + m.hv * v[k]);
    stack.frames.push_back(std::move(frame));
  }
  return stack;
}

void validate_uniform_angles(std::span<const double> angles) {
  const auto n = static_cast<int>(angles.size());
  if (n < 5) {
    throw PreconditionError("Fourier Stokes analysis needs at least 5 QWP angles, got " + std::to_string(n));
  }
  std::vector<double> folded(angles.begin(), angles.end());
  for (auto& a : folded) {
    a = std::fmod(a, kPi);
    if (a < 0.0) a += kPi;
  }
  std::sort(folded.begin(), folded.end());
  const double step = kPi / n;
  constexpr double kTol = 1e-6;
  for (int k = 0; k < n; ++k) {
    const double next = k + 1 < n ? folded[k + 1] : folded[0] + kPi;
    if (std::abs(next - folded[k] - step) > kTol) {
      throw PreconditionError("QWP angles must be uniformly spaced by pi/N over [0, pi)");
    }
  }
}

StokesMaps stokes_from_frames(const FrameStack& stack) {
  validate_uniform_angles(stack.angles);
  if (stack.frames.size() != stack.angles.size()) {
    throw PreconditionError("frame count does not match angle count");
  }
  const GridSpec grid = stack.frames.front().grid;
  for (const auto& fr : stack.frames) require_same_grid(grid, fr.grid, "stokes_from_frames");

  const double n = static_cast<double>(stack.angles.size());
  std::vector<double> a(grid.size(), 0.0), b(grid.size(), 0.0), c(grid.size(), 0.0), d(grid.size(), 0.0);
  for (std::size_t f = 0; f < stack.frames.size(); ++f) {
    const double t = stack.angles[f];
    const double s2 = std::sin(2.0 * t);
    const double c4 = std::cos(4.0 * t);
    const double s4 = std::sin(4.0 * t);
    const auto& vals = stack.frames[f].values;
    for (std::size_t k = 0; k < vals.size(); ++k) {
      a[k] += vals[k];
      b[k] += vals[k] * s2;
      c[k] += vals[k] * c4;
      d[k] += vals[k] * s4;
    }
  }
  StokesMaps s(grid);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double A = 2.0 / n * a[k];
    const double B = 4.0 / n * b[k];
    const double C = 4.0 / n * c[k];
    const double D = 4.0 / n * d[k];
    s.s0.values[k] = A - C;
    s.s1.values[k] = 2.0 * C;
    s.s2.values[k] = 2.0 * D;
    s.s3.values[k] = B;
  }
  return s;
}

PolarizationDegreeMap degree_of_polarization(const StokesMaps& s, double floor_fraction) {
  PolarizationDegreeMap out{s.grid, std::vector<std::optional<double>>(s.grid.size())};
  const double floor = floor_fraction * s.s0.max();
  for (std::size_t k = 0; k < s.grid.size(); ++k) {
    const double s0 = s.s0.values[k];
    if (!(s0 > floor) || s0 <= 0.0) continue;
    const double pol = std::sqrt(s.s1.values[k] * s.s1.values[k] + s.s2.values[k] * s.s2.values[k] +
                                 s.s3.values[k] * s.s3.values[k]);
    out.values[k] = std::clamp(pol / s0, 0.0, 1.0 + 1e-9);
  }
  return out;
}

StokesSummary summarize(const StokesMaps& s, double floor_fraction) {
  StokesSummary out;
  const double total = s.s0.sum();
  if (!(total > 0.0)) throw PreconditionError("summarize: total intensity is zero");
  out.s1_fraction = s.s1.sum() / total;
  out.s2_fraction = s.s2.sum() / total;
  out.s3_fraction = s.s3.sum() / total;
  double abs_s3 = 0.0;
  for (double v : s.s3.values) abs_s3 += std::abs(v);
  out.s3_power_fraction = abs_s3 / total;

  const auto dop = degree_of_polarization(s, floor_fraction);
  double weighted = 0.0;
  double weight = 0.0;
  for (std::size_t k = 0; k < dop.values.size(); ++k) {
    if (!dop.values[k]) continue;
    weighted += *dop.values[k] * s.s0.values[k];
    weight += s.s0.values[k];
  }
  out.mean_degree_of_polarization = weight > 0.0 ? weighted / weight : 0.0;
  return out;
}

double max_relative_difference(const StokesMaps& a, const StokesMaps& b) {
  require_same_grid(a.grid, b.grid, "max_relative_difference");
  const double ref = b.s0.max();
  if (!(ref > 0.0)) throw PreconditionError("max_relative_difference: reference s0 is zero");
  double worst = 0.0;
  const RealRaster* pa[] = {&a.s0, &a.s1, &a.s2, &a.s3};
  const RealRaster* pb[] = {&b.s0, &b.s1, &b.s2, &b.s3};
  for (int m = 0; m < 4; ++m) {
    for (std::size_t k = 0; k < a.grid.size(); ++k) {
      worst = std::max(worst, std::abs(pa[m]->values[k] - pb[m]->values[k]));
    }
  }
  return worst / ref;
}

}  // namespace vecbeam
