#pragma once

#include "vecbeam/field.hpp"
#include "vecbeam/jones.hpp"

namespace vecbeam {

struct PropagationOptions {
  /// The input is embedded in a zero-filled grid pad_factor times larger
  /// before transforming, then cropped back.
  int pad_factor = 2;
  /// Band-limit the transfer function to the frequencies it samples
  /// correctly. Without it, distances beyond the critical distance
  /// N dx^2 / lambda are refused.
  bool band_limit = true;
};

/// Band-limited angular spectrum propagation. The exp(i k z) carrier is
/// dropped, so a propagated LG mode compares directly with lg_mode at z.
/// Evanescent components are discarded. Distance 0 returns the input.
ScalarField angular_spectrum(const ScalarField& f, double distance, double wavelength,
                             const PropagationOptions& options = {});

VectorField propagate_vector(const VectorField& f, double distance, double wavelength,
                             const PropagationOptions& options = {});

/// Largest distance for which the unpadded-equivalent transfer function is
/// adequately sampled on the padded grid.
double critical_distance(const GridSpec& grid, double wavelength, int pad_factor);

}  // namespace vecbeam
