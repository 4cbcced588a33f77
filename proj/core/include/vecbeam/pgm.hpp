#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "vecbeam/field.hpp"
#include "vecbeam/phase_mask.hpp"

namespace vecbeam {

/// Greyscale image as read from or written to PGM (P5 binary or P2 ASCII).
/// Row 0 is the top row of the file.
struct PgmImage {
  int width = 0;
  int height = 0;
  int maxval = 255;
  std::vector<std::uint16_t> pixels;
};

PgmImage read_pgm(const std::filesystem::path& path);
/// Binary P5; 16-bit samples are big-endian as the format requires.
void write_pgm(const std::filesystem::path& path, const PgmImage& image);

/// 8-bit mask export: value = round(phase / 2pi * 255).
void write_mask_pgm(const std::filesystem::path& path, const PhaseMask& mask);
/// Inverse of write_mask_pgm on a grid with the given pitch. The imported
/// mask lives on the 255-level lattice.
PhaseMask read_mask_pgm(const std::filesystem::path& path, double dx, double dy);

/// 16-bit linear export; full white is `scale`, or the raster max when
/// scale <= 0. Returns the scale used, for the sidecar.
double write_intensity_pgm(const std::filesystem::path& path, const RealRaster& raster, double scale = 0.0);

/// Pixel values times `scale / maxval` on a grid with the given pitch.
RealRaster read_intensity_pgm(const std::filesystem::path& path, double dx, double dy, double scale = 1.0);

/// Comma-separated grid, one raster row per line.
void write_csv_grid(const std::filesystem::path& path, const RealRaster& raster);

}  // namespace vecbeam
