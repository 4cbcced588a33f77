#pragma once

#include <vector>

#include "vecbeam/field.hpp"

namespace vecbeam {

/// Bilinear samples of a raster on a centred circle, starting at phi = 0 and
/// running counter-clockwise. Throws PreconditionError when the circle leaves
/// the grid.
std::vector<double> sample_ring(const RealRaster& raster, double radius, int samples = 720);

/// Complex azimuthal Fourier coefficients c_m = mean(f(phi) exp(-i m phi))
/// for m = 0..max_harmonic.
std::vector<Complex> azimuthal_harmonics(const std::vector<double>& ring, int max_harmonic);

/// Harmonic m >= 1 carrying the most power.
int dominant_harmonic(const std::vector<Complex>& harmonics);

/// Power in the dominant harmonic divided by the largest power among the
/// other harmonics m >= 1.
double harmonic_contrast(const std::vector<Complex>& harmonics);

/// Number of local maxima of a periodic profile whose prominence exceeds
/// `relative_prominence` of the profile's peak-to-peak range. Throws
/// PreconditionError when the profile mean is near zero or the profile is
/// flat.
int count_azimuthal_maxima(const std::vector<double>& ring, double relative_prominence = 0.1);

/// Azimuth of one lobe of the m-fold pattern, arg(c_m) / m, in (-pi/m, pi/m].
double lobe_azimuth(const std::vector<double>& ring, int harmonic);

/// Rotation of the lobe pattern between two radii in radians, wrapped to
/// (-pi/m, pi/m], using the harmonic that dominates the outer ring.
struct LobeRotation {
  int harmonic = 0;
  double rotation = 0.0;
};
LobeRotation lobe_rotation(const RealRaster& raster, double inner_radius, double outer_radius);

}  // namespace vecbeam
