#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "vecbeam/field.hpp"
#include "vecbeam/jones.hpp"

namespace vecbeam {

/// "VBF1" field file: one ASCII line `VBF1 <nx> <ny> <dx> <dy> <ncomp>\n`
/// followed by little-endian float64 (re, im) pairs, row-major, one
/// component after the other. dx, dy are printed in shortest round-trip form.
struct VbfData {
  GridSpec grid;
  std::vector<std::vector<Complex>> components;
};

void write_vbf(std::ostream& out, const GridSpec& grid, const std::vector<std::span<const Complex>>& components);
VbfData read_vbf(std::istream& in);

void write_vbf(const std::filesystem::path& path, const ScalarField& f);
void write_vbf(const std::filesystem::path& path, const VectorField& f);
/// Real raster as a single component with zero imaginary parts.
void write_vbf(const std::filesystem::path& path, const RealRaster& r);

VbfData read_vbf(const std::filesystem::path& path);
ScalarField read_scalar_vbf(const std::filesystem::path& path);
VectorField read_vector_vbf(const std::filesystem::path& path);
/// Real parts of a single-component file.
RealRaster read_real_vbf(const std::filesystem::path& path);

}  // namespace vecbeam
