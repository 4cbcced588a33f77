#pragma once

#include <optional>
#include <span>
#include <vector>

#include "vecbeam/field.hpp"
#include "vecbeam/jones.hpp"

namespace vecbeam {

/// Pixel-wise Stokes parameters. Sign convention: s3 = +s0 for sigma_plus.
struct StokesMaps {
  explicit StokesMaps(GridSpec g) : grid(g), s0(g), s1(g), s2(g), s3(g) {}

  GridSpec grid;
  RealRaster s0;
  RealRaster s1;
  RealRaster s2;
  RealRaster s3;
};

/// QWP orientations and the matching camera frames behind a horizontal
/// polarizer.
struct FrameStack {
  std::vector<double> angles;
  std::vector<RealRaster> frames;
};

/// s0 = |h|^2 + |v|^2, s1 = |h|^2 - |v|^2, s2 = 2 Re(h conj v),
/// s3 = 2 Im(h conj v).
StokesMaps stokes_direct(const VectorField& f);

/// N angles theta_k = offset + k pi / N.
std::vector<double> uniform_qwp_angles(int n, double offset = 0.0);

/// Frame k is |polarizer(0) quarter_wave_plate(angles[k]) f|^2.
FrameStack simulate_qwp_scan(const VectorField& f, std::span<const double> angles);

/// Checks that the angles form a uniform set of N >= 5 points on [0, pi)
/// (any common offset, any order). Throws PreconditionError otherwise.
void validate_uniform_angles(std::span<const double> angles);

/// Fourier reconstruction. Per pixel, with I(theta) = (A + B sin 2t + C cos 4t
/// + D sin 4t) / 2:
///   A = 2/N sum I,  B = 4/N sum I sin 2t,  C = 4/N sum I cos 4t,
///   D = 4/N sum I sin 4t,
///   s0 = A - C, s1 = 2C, s2 = 2D, s3 = B.
StokesMaps stokes_from_frames(const FrameStack& stack);

/// sqrt(s1^2 + s2^2 + s3^2) / s0 clamped to [0, 1 + 1e-9]; pixels with
/// s0 < floor_fraction * max(s0) are left empty.
struct PolarizationDegreeMap {
  GridSpec grid;
  std::vector<std::optional<double>> values;
};
PolarizationDegreeMap degree_of_polarization(const StokesMaps& s, double floor_fraction = 1e-4);

struct StokesSummary {
  double mean_degree_of_polarization = 0.0;  ///< intensity-weighted over unmasked pixels
  double s1_fraction = 0.0;                  ///< sum s1 / sum s0
  double s2_fraction = 0.0;
  double s3_fraction = 0.0;
  double s3_power_fraction = 0.0;  ///< sum |s3| / sum s0
};
StokesSummary summarize(const StokesMaps& s, double floor_fraction = 1e-4);

/// Largest |a - b| over all four maps, divided by max(s0 of b).
double max_relative_difference(const StokesMaps& a, const StokesMaps& b);

}  // namespace vecbeam
