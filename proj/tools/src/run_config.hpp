#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "vecbeam/config.hpp"
#include "vecbeam/grid.hpp"
#include "vecbeam/pipeline.hpp"

namespace vecbeam::cli {

/// Everything a command needs: the merged configuration, the output
/// directory and the mode-range switch.
struct RunContext {
  Config config;
  std::filesystem::path out_dir;
  bool extended = false;
};

/// Rejects keys outside the schema, naming the line they came from.
void check_known_keys(const Config& config);

GridSpec grid_from(const Config& c);
double w0_from(const Config& c);
double wavelength_from(const Config& c);
/// [mode] p, l, flavor; enforces p <= 1, |l| <= 3 unless `extended`.
VectorBeamPreset preset_from(const Config& c, bool extended);
void check_mode_range(int p, int l, bool extended);

/// Masks from [masks]: preset synthesis (default) or PGM import when
/// source = file, then optional quantization to `levels`.
MaskPair masks_from(const Config& c, const GridSpec& grid, bool extended);

/// Converter settings from [converter] on top of the given masks.
ConversionConfig conversion_from(const Config& c, const GridSpec& grid, MaskPair masks);

/// Field for the analysis commands: [field] input when set, otherwise a
/// fresh conversion.
VectorField field_from(const Config& c, bool extended);

/// "p:l, p:l" list.
std::vector<std::pair<int, int>> modes_from(const Config& c, std::string_view key,
                                            const std::vector<std::pair<int, int>>& fallback);

/// Shortest round-trip decimal form.
std::string fmt(double v);

/// key = value sidecar, readable with Config::load.
using Entries = std::vector<std::pair<std::string, std::string>>;
void write_sidecar(const std::filesystem::path& path, const Entries& entries);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace vecbeam::cli
