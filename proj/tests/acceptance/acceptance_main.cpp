// Acceptance run: one PASS/FAIL line per criterion, with the measured values
// printed underneath. Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "vecbeam/jones.hpp"
#include "vecbeam/laguerre.hpp"
#include "vecbeam/pipeline.hpp"
#include "vecbeam/polarimetry.hpp"
#include "vecbeam/propagation.hpp"
#include "vecbeam/ring_analysis.hpp"
#include "vecbeam/squeezing.hpp"

namespace vb = vecbeam;

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kWavelength = 1.56e-6;
constexpr double kW0 = 1e-3;
const vb::GridSpec kGrid = vb::GridSpec::square(512, 8e-3);

int g_failures = 0;

void note(const char* fmt, double a = 0, double b = 0, double c = 0, double d = 0) {
  std::printf("    ");
  std::printf(fmt, a, b, c, d);
  std::printf("\n");
}

void verdict(int id, bool ok, const char* what, Clock::time_point start, double budget_s) {
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  const bool in_time = secs < budget_s;
  if (!ok || !in_time) ++g_failures;
  std::printf("%s criterion %d: %s (%.2f s, budget %.0f s)\n", ok && in_time ? "PASS" : "FAIL", id, what, secs,
              budget_s);
  std::fflush(stdout);
}

vb::VectorField ideal_conversion(const vb::VectorBeamPreset& preset, double eta, double z_obs = 0.0) {
  auto masks = vb::preset_masks(preset, kW0, kGrid);
  vb::ConversionConfig cfg(kGrid, std::move(masks.a), std::move(masks.b));
  cfg.w0 = kW0;
  cfg.wavelength = kWavelength;
  cfg.eta_mod = eta;
  cfg.observation_distance = z_obs;
  return vb::convert(cfg);
}

double brightest_radius(const vb::RealRaster& r) {
  const double step = r.grid.dx();
  double best_r = step;
  double best = -1.0;
  for (double radius = step; radius < 0.45 * r.grid.extent_x(); radius += step) {
    const auto ring = vb::sample_ring(r, radius, 90);
    const double mean = std::accumulate(ring.begin(), ring.end(), 0.0);
    if (mean > best) {
      best = mean;
      best_r = radius;
    }
  }
  return best_r;
}

void criterion_1() {
  const auto start = Clock::now();
  const std::vector<double> eta{0.36};
  const auto report = vb::budget(-3.4, eta);
  const double out = report.output().db();
  note("-3.4 dB through transmission 0.36 -> %.6f dB (window [-1.0, -0.8])", out);
  verdict(1, out >= -1.0 && out <= -0.8, "squeezing budget within the reported window", start, 1.0);
}

void criterion_2() {
  const auto start = Clock::now();
  const vb::VectorBeamPreset preset{0, 1, vb::BeamFlavor::kRadialLike};
  const auto f = ideal_conversion(preset, 1.0);
  const auto target = vb::target_superposition(preset, kW0, kWavelength, kGrid);
  const double overlap = vb::overlap_fraction(target, f);
  const double s3 = vb::summarize(vb::stokes_direct(f)).s3_power_fraction;
  note("overlap with (LG0+1 s+ + LG0-1 s-)/sqrt2: %.6f (need >= 0.99)", overlap);
  note("phase-only bound at matched waist: pi/4 = %.6f", M_PI / 4);
  note("S3 power fraction: %.3e (need < 1e-6)", s3);
  verdict(2, overlap >= 0.99 && s3 < 1e-6, "ideal radial beam overlap and S3", start, 10.0);
}

void criterion_3() {
  const auto start = Clock::now();
  bool ok = true;
  for (int p = 0; p <= 1; ++p) {
    for (int l = 1; l <= 3; ++l) {
      const vb::VectorBeamPreset preset{p, l, vb::BeamFlavor::kRadialLike};
      const auto f = ideal_conversion(preset, 1.0);
      const auto target = vb::target_superposition(preset, kW0, kWavelength, kGrid);
      const double overlap = vb::overlap_fraction(target, f);
      const auto s = vb::stokes_direct(f);
      // At the mask plane s0 is still Gaussian; analyse on the target's ring.
      const double ring = brightest_radius(vb::stokes_direct(target).s0);
      const auto h1 = vb::azimuthal_harmonics(vb::sample_ring(s.s1, ring), 4 * l);
      const auto h2 = vb::azimuthal_harmonics(vb::sample_ring(s.s2, ring), 4 * l);
      const bool sym = vb::dominant_harmonic(h1) == 2 * l && vb::dominant_harmonic(h2) == 2 * l &&
                       vb::harmonic_contrast(h1) >= 10.0 && vb::harmonic_contrast(h2) >= 10.0;
      ok = ok && overlap >= 0.99 && sym;
      std::printf("    LG%d%d: overlap %.6f, s1 harmonic %d (contrast %.2e), s2 harmonic %d (contrast %.2e)\n", p, l,
                  overlap, vb::dominant_harmonic(h1), vb::harmonic_contrast(h1), vb::dominant_harmonic(h2),
                  vb::harmonic_contrast(h2));
    }
  }
  note("overlap >= 0.99 is out of reach for phase-only masks; the Stokes symmetry part is checked alongside");
  verdict(3, ok, "all six modes: overlap and 2l-fold Stokes symmetry", start, 120.0);
}

void criterion_4() {
  const auto start = Clock::now();
  const auto angles = vb::uniform_qwp_angles(16);
  std::mt19937_64 rng(20240501);
  std::normal_distribution<double> n(0.0, 1.0);
  double worst_random = 0.0;
  for (int t = 0; t < 100; ++t) {
    vb::VectorField f(vb::GridSpec(32, 32, 1e-5, 1e-5));
    for (auto& a : f.h().amps()) a = {n(rng), n(rng)};
    for (auto& a : f.v().amps()) a = {n(rng), n(rng)};
    worst_random = std::max(worst_random, vb::max_relative_difference(
                                              vb::stokes_from_frames(vb::simulate_qwp_scan(f, angles)),
                                              vb::stokes_direct(f)));
  }
  double worst_preset = 0.0;
  for (int p = 0; p <= 1; ++p) {
    for (int l = 1; l <= 3; ++l) {
      const auto f = ideal_conversion({p, l, vb::BeamFlavor::kRadialLike}, 0.8);
      worst_preset = std::max(worst_preset, vb::max_relative_difference(
                                                vb::stokes_from_frames(vb::simulate_qwp_scan(f, angles)),
                                                vb::stokes_direct(f)));
    }
  }
  note("worst relative error: random fields %.3e, presets %.3e (need < 1e-9)", worst_random, worst_preset);
  verdict(4, worst_random < 1e-9 && worst_preset < 1e-9, "Stokes round trip with N = 16", start, 60.0);
}

void criterion_5() {
  const auto start = Clock::now();
  const vb::VectorBeamPreset preset{0, 2, vb::BeamFlavor::kRadialLike};
  const double zr = M_PI * kW0 * kW0 / kWavelength;
  const auto ideal = ideal_conversion(preset, 1.0, zr);
  const double ring = brightest_radius(vb::stokes_direct(ideal).s0);
  const double rot[2] = {
      vb::lobe_rotation(vb::polarizer_image(ideal_conversion(preset, 0.8, zr), 0.0), 0.6 * ring, 1.4 * ring).rotation,
      vb::lobe_rotation(vb::polarizer_image(ideal, 0.0), 0.6 * ring, 1.4 * ring).rotation,
  };
  note("analysis radii %.3e and %.3e m", 0.6 * ring, 1.4 * ring);
  note("LG02 behind a polarizer at z_R: lobe rotation %.4f deg (eta 0.8, need > 5), %.4f deg (eta 1, need < 0.5)",
       std::abs(rot[0]) * 180 / M_PI, std::abs(rot[1]) * 180 / M_PI);
  note("with both SLM halves in one plane the lobe azimuth is radius independent, so the rotation is 0");
  verdict(5, std::abs(rot[0]) * 180 / M_PI > 5.0 && std::abs(rot[1]) * 180 / M_PI < 0.5, "spiral lobe rotation from the zeroth order", start,
          30.0);
}

double second_moment_radius(const vb::ScalarField& f) {
  const auto& g = f.grid();
  double num = 0.0;
  double den = 0.0;
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      const double w = std::norm(f(i, j));
      num += (g.x(i) * g.x(i) + g.y(j) * g.y(j)) * w;
      den += w;
    }
  }
  return std::sqrt(2.0 * num / den);
}

double relative_error(const vb::VectorField& a, const vb::VectorField& b) {
  double diff = 0.0;
  for (std::size_t k = 0; k < a.grid().size(); ++k) {
    diff += std::norm(a.h().amps()[k] - b.h().amps()[k]) + std::norm(a.v().amps()[k] - b.v().amps()[k]);
  }
  return std::sqrt(diff * a.grid().pixel_area() / vb::power(b));
}

void criterion_6() {
  const auto start = Clock::now();

  std::vector<vb::ScalarField> modes;
  for (int p = 0; p <= 1; ++p)
    for (int l = -3; l <= 3; ++l) modes.push_back(vb::lg_mode({.p = p, .l = l, .w0 = kW0}, kGrid));
  double ortho = 0.0;
  for (std::size_t a = 0; a < modes.size(); ++a)
    for (std::size_t b = a; b < modes.size(); ++b)
      ortho = std::max(ortho, std::abs(vb::inner_product(modes[a], modes[b]) - vb::Complex(a == b ? 1.0 : 0.0)));

  const vb::LGModeSpec gauss{.p = 0, .l = 0, .w0 = kW0, .wavelength = kWavelength};
  const double zr = gauss.rayleigh_range();
  double wz = 0.0;
  for (double frac : {0.5, 1.0}) {
    auto spec = gauss;
    spec.z = frac * zr;
    const double got = second_moment_radius(vb::angular_spectrum(vb::lg_mode(gauss, kGrid), frac * zr, kWavelength));
    wz = std::max(wz, std::abs(got / spec.beam_radius() - 1.0));
  }

  // Compact in the window so nothing reaches the zero padding over these
  // distances; a field spilling past the window is cropped, not propagated.
  const vb::LGModeSpec compact{.p = 1, .l = 3, .w0 = 0.6e-3, .wavelength = kWavelength};
  const vb::VectorField f(vb::lg_mode(compact, kGrid),
                          vb::lg_mode({.p = 0, .l = -2, .w0 = 0.6e-3, .wavelength = kWavelength}, kGrid));
  const double z1 = 0.1 * compact.rayleigh_range();
  const double z2 = 0.15 * compact.rayleigh_range();
  const auto split = vb::propagate_vector(vb::propagate_vector(f, z1, kWavelength), z2, kWavelength);
  const double compose = relative_error(split, vb::propagate_vector(f, z1 + z2, kWavelength));
  const double reverse = relative_error(
      vb::propagate_vector(vb::propagate_vector(f, z2, kWavelength), -z2, kWavelength), f);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 2 * M_PI);
  double unitary = 0.0;
  for (int t = 0; t < 10000; ++t) {
    const auto m = vb::waveplate(u(rng), u(rng));
    unitary = std::max(unitary, vb::distance(m.adjoint() * m, vb::JonesMatrix::identity()));
  }

  std::uniform_real_distribution<double> e(0.0, 1.0);
  double loss = 0.0;
  for (int t = 0; t < 10000; ++t) {
    const auto s = vb::SqueezingState::from_db(-10.0 * e(rng));
    const double a = e(rng);
    const double b = e(rng);
    loss = std::max(loss,
                    std::abs(vb::apply_loss(vb::apply_loss(s, a), b).variance() - vb::apply_loss(s, a * b).variance()));
  }

  note("LG orthonormality deviation %.3e (need < 1e-6)", ortho);
  note("Gaussian w(z) relative error %.3e (need < 1e-3)", wz);
  note("composition %.3e, reversibility %.3e (need < 1e-10)", compose, reverse);
  note("wave-plate unitarity %.3e, loss composition %.3e (need < 1e-12)", unitary, loss);
  const bool ok = ortho < 1e-6 && wz < 1e-3 && compose < 1e-10 && reverse < 1e-10 && unitary < 1e-12 && loss < 1e-12;
  verdict(6, ok, "numerical infrastructure", start, 120.0);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  std::printf("SKIP criterion 7: squeezing generation, sideband spectra and measured image imperfections need the "
              "physical apparatus\n");
  std::printf("%d of 6 checked criteria failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
