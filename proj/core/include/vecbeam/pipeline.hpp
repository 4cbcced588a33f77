#pragma once

#include <utility>

#include "vecbeam/jones.hpp"
#include "vecbeam/phase_mask.hpp"
#include "vecbeam/propagation.hpp"

namespace vecbeam {

enum class BeamFlavor { kRadialLike, kAzimuthalLike };

/// Vector beam made of LG_{p,+l} and LG_{p,-l} in opposite circular states.
struct VectorBeamPreset {
  int p = 0;
  int l = 1;
  BeamFlavor flavor = BeamFlavor::kRadialLike;

  void validate() const;
};

/// Relative phase chi between the sigma_plus and sigma_minus arms of the
/// target: 0 for radial-like, pi for azimuthal-like.
double target_arm_phase(BeamFlavor flavor);

/// Constant added to mask_b. The QWP leaves the sigma_plus arm a quarter
/// period ahead, so mask_b carries pi/2 on top of the flavor phase.
double mask_b_offset(BeamFlavor flavor);

struct MaskPair {
  PhaseMask a;
  PhaseMask b;
};

/// mask_a = lg_phase_mask(p, +l), mask_b = lg_phase_mask(p, -l) + mask_b_offset.
MaskPair preset_masks(const VectorBeamPreset& preset, double w0, const GridSpec& grid);

/// Per-mask adjustment for matching beam width and divergence between the
/// two SLM planes: the radial structure is drawn for waist_scale * w0 and a
/// kinoform lens is added when focal_length != 0.
struct MaskTweak {
  double waist_scale = 1.0;
  double focal_length = 0.0;
};

MaskPair preset_masks(const VectorBeamPreset& preset, double w0, const GridSpec& grid, const MaskTweak& tweak_a,
                      const MaskTweak& tweak_b, double wavelength);

/// Double-reflection converter settings. Angles in radians.
struct ConversionConfig {
  ConversionConfig(GridSpec grid, PhaseMask mask_a, PhaseMask mask_b);

  GridSpec grid;
  PhaseMask mask_a;
  PhaseMask mask_b;
  double w0 = 1e-3;
  double wavelength = 1.56e-6;
  double eta_mod = 0.8;
  double inter_half_distance = 0.0;
  double hwp_angle = 0.25 * kPi;
  double qwp_angle = 0.25 * kPi;
  /// Free-space distance from the QWP to the analysis plane.
  double observation_distance = 0.0;
  PropagationOptions propagation;

  void validate() const;
};

/// Unit-power Gaussian at 45 degrees linear polarization (equal, in-phase H and V).
VectorField input_beam(double w0, const GridSpec& grid);

/// Gaussian in -> SLM half A -> propagate -> HWP -> SLM half B -> QWP
/// (-> propagate to the observation plane).
VectorField convert(const ConversionConfig& cfg);

/// (LG_{p,+l} sigma_plus + exp(i chi) LG_{p,-l} sigma_minus) / sqrt(2) at z.
VectorField target_superposition(const VectorBeamPreset& preset, double w0, double wavelength,
                                 const GridSpec& grid, double z = 0.0);

/// |<a, b>|^2 / (P(a) P(b)): fraction of b's power in the mode a.
double overlap_fraction(const VectorField& mode, const VectorField& f);

/// |polarizer(axis) f|^2 per pixel.
RealRaster polarizer_image(const VectorField& f, double axis);

/// Azimuthal maxima on a centred ring (10% relative prominence).
int spiral_arm_count(const RealRaster& intensity, double ring_radius);

}  // namespace vecbeam
