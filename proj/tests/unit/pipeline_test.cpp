#include <gtest/gtest.h>

#include <cmath>

#include "vecbeam/errors.hpp"
#include "vecbeam/laguerre.hpp"
#include "vecbeam/mask_synth.hpp"
#include "vecbeam/pipeline.hpp"
#include "vecbeam/polarimetry.hpp"
#include "vecbeam/ring_analysis.hpp"

namespace vecbeam {
namespace {

constexpr double kW0 = 1e-3;
const GridSpec kGrid = GridSpec::square(256, 8e-3);

ConversionConfig preset_config(const VectorBeamPreset& preset, double eta) {
  auto masks = preset_masks(preset, kW0, kGrid);
  ConversionConfig cfg(kGrid, std::move(masks.a), std::move(masks.b));
  cfg.eta_mod = eta;
  return cfg;
}

double winding_on_ring(const ScalarField& f, double radius) {
  const int n = 720;
  const GridSpec& g = f.grid();
  auto at = [&](int k) {
    const double phi = 2 * M_PI * (k % n) / n;
    const int i = static_cast<int>(std::lround(radius * std::cos(phi) / g.dx() + 0.5 * (g.nx() - 1)));
    const int j = static_cast<int>(std::lround(radius * std::sin(phi) / g.dy() + 0.5 * (g.ny() - 1)));
    return f(i, j);
  };
  double total = 0.0;
  for (int k = 0; k < n; ++k) total += std::arg(at(k + 1) / at(k));
  return total;
}

TEST(PresetMasks, WindOppositeWaysAndFlavorShiftsByPi) {
  const auto r = preset_masks({0, 1, BeamFlavor::kRadialLike}, kW0, kGrid);
  const auto a = preset_masks({0, 1, BeamFlavor::kAzimuthalLike}, kW0, kGrid);
  for (std::size_t k = 0; k < r.a.phase().size(); ++k) {
    ASSERT_EQ(r.a.phase()[k], a.a.phase()[k]);
    ASSERT_NEAR(std::abs(phase_distance(a.b.phase()[k], r.b.phase()[k])), M_PI, 1e-12);
  }
  EXPECT_THROW(preset_masks({0, 0, BeamFlavor::kRadialLike}, kW0, kGrid), DomainError);
  EXPECT_THROW(preset_masks({-1, 1, BeamFlavor::kRadialLike}, kW0, kGrid), DomainError);
}

TEST(PresetMasks, RadialOrderOneCarriesTheBinaryRing) {
  const auto m = preset_masks({1, 3, BeamFlavor::kRadialLike}, kW0, kGrid);
  const auto bare = lg_phase_mask(1, 3, kW0, kGrid);
  EXPECT_EQ(m.a.phase(), bare.phase());
  // L_1^3(x) = 4 - x changes sign at 2 r^2 / w0^2 = 4, i.e. r = sqrt(2) w0.
  const int centre = 128;
  const int edge = centre + static_cast<int>(std::sqrt(2.0) * kW0 / kGrid.dx());
  EXPECT_NEAR(std::abs(phase_distance(m.a(edge - 2, centre), m.a(edge + 2, centre))), M_PI, 0.05);
}

TEST(PresetMasks, TweaksScaleTheRingAndAddALens) {
  const VectorBeamPreset preset{1, 1, BeamFlavor::kRadialLike};
  const auto plain = preset_masks(preset, kW0, kGrid);
  const auto same = preset_masks(preset, kW0, kGrid, {}, {}, 1.56e-6);
  EXPECT_EQ(same.a.phase(), plain.a.phase());
  EXPECT_EQ(same.b.phase(), plain.b.phase());

  const auto scaled = preset_masks(preset, kW0, kGrid, {.waist_scale = 1.2}, {}, 1.56e-6);
  EXPECT_EQ(scaled.a.phase(), lg_phase_mask(1, 1, 1.2 * kW0, kGrid).phase());
  EXPECT_EQ(scaled.b.phase(), plain.b.phase());

  const auto lensed = preset_masks(preset, kW0, kGrid, {}, {.focal_length = 1.5}, 1.56e-6);
  const auto want = combine({plain.b, kinoform_lens(1.5, 1.56e-6, kGrid)});
  for (std::size_t k = 0; k < kGrid.size(); ++k) {
    ASSERT_NEAR(phase_distance(lensed.b.phase()[k], want.phase()[k]), 0.0, 1e-12);
  }
  EXPECT_THROW(preset_masks(preset, kW0, kGrid, {.waist_scale = 0.0}, {}, 1.56e-6), DomainError);
}

TEST(Convert, IdealRadialBeamIsLinearAlongTheAzimuth) {
  const auto out = convert(preset_config({0, 1, BeamFlavor::kRadialLike}, 1.0));
  const auto s = stokes_direct(out);
  const double peak = s.s0.max();
  for (int j = 0; j < kGrid.ny(); ++j) {
    for (int i = 0; i < kGrid.nx(); ++i) {
      ASSERT_LT(std::abs(s.s3(i, j)), 1e-10 * peak);
      if (s.s0(i, j) < 1e-3 * peak) continue;
      const double orientation = 0.5 * std::atan2(s.s2(i, j), s.s1(i, j));
      const double phi = std::atan2(kGrid.y(j), kGrid.x(i));
      ASSERT_NEAR(std::sin(orientation - phi), 0.0, 1e-9) << i << ' ' << j;
    }
  }
}

TEST(Convert, CircularComponentsCarryOppositeCharge) {
  for (int p : {0, 1}) {
    for (int l : {1, 2, 3}) {
      const auto out = convert(preset_config({p, l, BeamFlavor::kRadialLike}, 1.0));
      // Inside the first radial node of L_1^l at r = w0 sqrt((l + 1) / 2).
      EXPECT_NEAR(winding_on_ring(out.circular_plus(), 0.6 * kW0), 2 * M_PI * l, 1e-9);
      EXPECT_NEAR(winding_on_ring(out.circular_minus(), 0.6 * kW0), -2 * M_PI * l, 1e-9);
    }
  }
}

TEST(Convert, FlatMasksLeaveOnlyThePlates) {
  ConversionConfig cfg(kGrid, PhaseMask(kGrid), PhaseMask(kGrid));
  cfg.eta_mod = 1.0;
  cfg.hwp_angle = 0.3;
  cfg.qwp_angle = 1.1;
  const auto out = convert(cfg);
  const auto want = apply_jones(input_beam(kW0, kGrid), quarter_wave_plate(1.1) * half_wave_plate(0.3));
  const double peak = std::sqrt(intensity(want.h()).max() + intensity(want.v()).max());
  for (std::size_t k = 0; k < kGrid.size(); ++k) {
    ASSERT_LT(std::abs(out.h().amps()[k] - want.h().amps()[k]), 1e-12 * peak);
    ASSERT_LT(std::abs(out.v().amps()[k] - want.v().amps()[k]), 1e-12 * peak);
  }
}

TEST(Convert, PowerIndependentOfPlateAnglesWhenUnitary) {
  auto cfg = preset_config({1, 2, BeamFlavor::kAzimuthalLike}, 1.0);
  const double ref = power(input_beam(kW0, kGrid));
  for (double hwp : {0.0, 0.4, 1.3}) {
    for (double qwp : {0.0, 0.7, 2.0}) {
      cfg.hwp_angle = hwp;
      cfg.qwp_angle = qwp;
      EXPECT_NEAR(power(convert(cfg)), ref, 1e-12);
    }
  }
}

TEST(Convert, ModulationLossMonotonicallyLeaksOutOfTarget) {
  for (const VectorBeamPreset preset : {VectorBeamPreset{0, 1}, VectorBeamPreset{0, 2}, VectorBeamPreset{1, 3}}) {
    const auto target = target_superposition(preset, kW0, 1.56e-6, kGrid);
    double previous = -1.0;
    for (double eta : {1.0, 0.9, 0.8, 0.6}) {
      const double outside = 1.0 - overlap_fraction(target, convert(preset_config(preset, eta)));
      EXPECT_GT(outside, previous) << "eta=" << eta;
      previous = outside;
    }
  }
}

TEST(Convert, ResidualModulationProducesCircularContent) {
  const auto ideal = summarize(stokes_direct(convert(preset_config({0, 2}, 1.0))));
  const auto lossy = summarize(stokes_direct(convert(preset_config({0, 2}, 0.8))));
  EXPECT_LT(ideal.s3_power_fraction, 1e-10);
  EXPECT_GT(lossy.s3_power_fraction, 0.05);
}

TEST(Convert, RejectsInvalidConfig) {
  auto cfg = preset_config({0, 1}, 1.0);
  cfg.eta_mod = 1.2;
  EXPECT_THROW(convert(cfg), DomainError);
  ConversionConfig bad(kGrid, PhaseMask(kGrid), PhaseMask(GridSpec::square(16, 1e-3)));
  EXPECT_THROW(convert(bad), ShapeError);
}

TEST(TargetSuperposition, IsUnitPowerAndFlavorsAreOrthogonal) {
  const auto r = target_superposition({1, 2, BeamFlavor::kRadialLike}, kW0, 1.56e-6, kGrid);
  const auto a = target_superposition({1, 2, BeamFlavor::kAzimuthalLike}, kW0, 1.56e-6, kGrid);
  EXPECT_NEAR(power(r), 1.0, 1e-6);
  EXPECT_LT(std::abs(inner_product(r, a)), 1e-6);
}

TEST(PolarizerImage, RadialBeamShowsTwoHorizontalLobes) {
  const auto out = convert(preset_config({0, 1, BeamFlavor::kRadialLike}, 1.0));
  const auto img = polarizer_image(out, 0.0);
  EXPECT_EQ(spiral_arm_count(img, kW0), 2);
  const auto ring = sample_ring(img, kW0);
  EXPECT_NEAR(lobe_azimuth(ring, 2), 0.0, 1e-9);
  EXPECT_LT(ring[180], 1e-3 * ring[0]);  // phi = pi/2, bilinear floor
}

TEST(PolarizerImage, CompletenessAndPeriodicity) {
  const auto out = convert(preset_config({1, 2, BeamFlavor::kRadialLike}, 0.8));
  const auto total = intensity(out.h()).values;
  const auto v = intensity(out.v()).values;
  for (double axis : {0.0, 0.37, 1.2}) {
    const auto a = polarizer_image(out, axis);
    const auto b = polarizer_image(out, axis + M_PI / 2);
    const auto c = polarizer_image(out, axis + M_PI);
    for (std::size_t k = 0; k < kGrid.size(); ++k) {
      ASSERT_NEAR(a.values[k] + b.values[k], total[k] + v[k], 1e-12 * (total[k] + v[k]) + 1e-300);
      ASSERT_NEAR(a.values[k], c.values[k], 1e-12 * (total[k] + v[k]) + 1e-300);
    }
  }
}

// At the waist each circular arm is G (sqrt(eta) exp(+-i l phi) + sqrt(1 - eta)),
// so behind a polarizer the ring follows (cos(l phi - b) + k cos b)^2 with
// k = sqrt((1 - eta) / eta). For eta = 0.8 the weaker lobe keeps at least
// ((1 - k) / (1 + k))^2 = 11% prominence: 2l lobes of alternating height.
TEST(SpiralArmCount, LossyDoubleChargeBeamAlternatesLobeHeights) {
  auto cfg = preset_config({0, 2, BeamFlavor::kRadialLike}, 0.8);
  const auto img = polarizer_image(convert(cfg), 0.0);
  EXPECT_EQ(spiral_arm_count(img, kW0), 4);
  const auto ring = sample_ring(img, kW0);
  const auto c = azimuthal_harmonics(ring, 4);
  // The remnant cross term puts power into the l-th harmonic.
  EXPECT_GT(std::abs(c[2]), 0.1 * std::abs(c[4]));
  EXPECT_GT(ring[0], 2.0 * ring[180]);
  EXPECT_THROW(count_azimuthal_maxima(std::vector<double>(720, 0.0)), PreconditionError);
}

TEST(SpiralArmCount, UniformRingIsAnError) {
  RealRaster flat(kGrid);
  std::fill(flat.values.begin(), flat.values.end(), 1.0);
  EXPECT_THROW(spiral_arm_count(flat, kW0), PreconditionError);
  EXPECT_THROW(spiral_arm_count(RealRaster(kGrid), kW0), PreconditionError);
}

TEST(RingAnalysis, HarmonicsOfACosineProfile) {
  std::vector<double> ring(720);
  for (std::size_t k = 0; k < ring.size(); ++k) {
    ring[k] = 2.0 + std::cos(3.0 * (2 * M_PI * k / 720.0 - 0.2));
  }
  const auto c = azimuthal_harmonics(ring, 8);
  EXPECT_NEAR(c[0].real(), 2.0, 1e-12);
  EXPECT_EQ(dominant_harmonic(c), 3);
  EXPECT_GT(harmonic_contrast(c), 1e20);
  EXPECT_NEAR(lobe_azimuth(ring, 3), 0.2, 1e-12);
  EXPECT_EQ(count_azimuthal_maxima(ring), 3);
}

TEST(RingAnalysis, RingOutsideGridIsRejected) {
  EXPECT_THROW(sample_ring(RealRaster(kGrid), 5e-3), PreconditionError);
}

}  // namespace
}  // namespace vecbeam
