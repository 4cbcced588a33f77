#include "vecbeam/pipeline.hpp"

#include <cmath>
#include <string>

#include "vecbeam/errors.hpp"
#include "vecbeam/laguerre.hpp"
#include "vecbeam/mask_synth.hpp"
#include "vecbeam/ring_analysis.hpp"

namespace vecbeam {

void VectorBeamPreset::validate() const {
  if (p < 0) throw DomainError("preset: p must be >= 0");
  if (l < 1) throw DomainError("preset: l must be >= 1");
}

double target_arm_phase(BeamFlavor flavor) { return flavor == BeamFlavor::kRadialLike ? 0.0 : kPi; }

double mask_b_offset(BeamFlavor flavor) { return 0.5 * kPi + target_arm_phase(flavor); }

MaskPair preset_masks(const VectorBeamPreset& preset, double w0, const GridSpec& grid) {
  preset.validate();
  return {lg_phase_mask(preset.p, preset.l, w0, grid),
          add_constant(lg_phase_mask(preset.p, -preset.l, w0, grid), mask_b_offset(preset.flavor))};
}

namespace {

PhaseMask tweaked(const PhaseMask& base, const MaskTweak& tweak, double wavelength) {
  if (tweak.focal_length == 0.0) return base;
  return combine({base, kinoform_lens(tweak.focal_length, wavelength, base.grid())});
}

}  // namespace

MaskPair preset_masks(const VectorBeamPreset& preset, double w0, const GridSpec& grid, const MaskTweak& tweak_a,
                      const MaskTweak& tweak_b, double wavelength) {
  preset.validate();
  if (!(tweak_a.waist_scale > 0.0) || !(tweak_b.waist_scale > 0.0)) {
    throw DomainError("preset_masks: waist_scale must be > 0");
  }
  const PhaseMask a = lg_phase_mask(preset.p, preset.l, w0 * tweak_a.waist_scale, grid);
  const PhaseMask b = add_constant(lg_phase_mask(preset.p, -preset.l, w0 * tweak_b.waist_scale, grid),
                                   mask_b_offset(preset.flavor));
  return {tweaked(a, tweak_a, wavelength), tweaked(b, tweak_b, wavelength)};
}

ConversionConfig::ConversionConfig(GridSpec g, PhaseMask a, PhaseMask b)
    : grid(g), mask_a(std::move(a)), mask_b(std::move(b)) {}

void ConversionConfig::validate() const {
  require_same_grid(grid, mask_a.grid(), "conversion mask_a");
  require_same_grid(grid, mask_b.grid(), "conversion mask_b");
  if (!(w0 > 0.0)) throw DomainError("conversion: w0 must be > 0");
  if (!(wavelength > 0.0)) throw DomainError("conversion: wavelength must be > 0");
  if (!(eta_mod >= 0.0 && eta_mod <= 1.0)) throw DomainError("conversion: eta_mod must lie in [0, 1]");
  if (!std::isfinite(inter_half_distance) || !std::isfinite(observation_distance)) {
    throw DomainError("conversion: distances must be finite");
  }
}

VectorField input_beam(double w0, const GridSpec& grid) {
  ScalarField g = lg_mode({.p = 0, .l = 0, .w0 = w0}, grid);
  g *= 1.0 / std::sqrt(2.0);
  return VectorField(g, g);
}

VectorField convert(const ConversionConfig& cfg) {
  cfg.validate();
  VectorField f = input_beam(cfg.w0, cfg.grid);
  f = slm_reflect(f, SlmModel(cfg.mask_a, cfg.eta_mod));
  f = propagate_vector(f, cfg.inter_half_distance, cfg.wavelength, cfg.propagation);
  f = apply_jones(f, half_wave_plate(cfg.hwp_angle));
  f = slm_reflect(f, SlmModel(cfg.mask_b, cfg.eta_mod));
  f = apply_jones(f, quarter_wave_plate(cfg.qwp_angle));
  return propagate_vector(f, cfg.observation_distance, cfg.wavelength, cfg.propagation);
}

VectorField target_superposition(const VectorBeamPreset& preset, double w0, double wavelength,
                                 const GridSpec& grid, double z) {
  preset.validate();
  const ScalarField plus = lg_mode({.p = preset.p, .l = preset.l, .w0 = w0, .wavelength = wavelength, .z = z}, grid);
  const ScalarField minus =
      lg_mode({.p = preset.p, .l = -preset.l, .w0 = w0, .wavelength = wavelength, .z = z}, grid);
  const auto sp = sigma_plus();
  const auto sm = sigma_minus();
  const Complex chi = std::polar(1.0, target_arm_phase(preset.flavor));
  const double r = 1.0 / std::sqrt(2.0);
  VectorField out(grid);
  auto a = plus.amps();
  auto b = minus.amps();
  auto h = out.h().amps();
  auto v = out.v().amps();
  for (std::size_t k = 0; k < h.size(); ++k) {
    h[k] = r * (a[k] * sp[0] + chi * b[k] * sm[0]);
    v[k] = r * (a[k] * sp[1] + chi * b[k] * sm[1]);
  }
  return out;
}

double overlap_fraction(const VectorField& mode, const VectorField& f) {
  const double pm = power(mode);
  const double pf = power(f);
  if (pm <= 0.0 || pf <= 0.0) throw DomainError("overlap_fraction: zero-power field");
  return std::norm(inner_product(mode, f)) / (pm * pf);
}

RealRaster polarizer_image(const VectorField& f, double axis) {
  const double c = std::cos(axis);
  const double s = std::sin(axis);
  RealRaster out(f.grid());
  auto h = f.h().amps();
  auto v = f.v().amps();
  for (std::size_t k = 0; k < h.size(); ++k) out.values[k] = std::norm(c * h[k] + s * v[k]);
  return out;
}

int spiral_arm_count(const RealRaster& intensity, double ring_radius) {
  return count_azimuthal_maxima(sample_ring(intensity, ring_radius), 0.1);
}

}  // namespace vecbeam
