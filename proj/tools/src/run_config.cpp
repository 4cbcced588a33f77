#include "run_config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>

#include "vecbeam/errors.hpp"
#include "vecbeam/mask_synth.hpp"
#include "vecbeam/pgm.hpp"
#include "vecbeam/vbf.hpp"

namespace vecbeam::cli {
namespace {

constexpr std::array kKnownKeys = {
    "grid.n",                 "grid.extent",
    "beam.w0",                "beam.wavelength",
    "mode.p",                 "mode.l",
    "mode.flavor",            "masks.source",
    "masks.a_path",           "masks.b_path",
    "masks.levels",           "masks.kinoform_f",
    "masks.a_waist_scale",    "masks.b_waist_scale",
    "masks.a_focal_length",   "masks.b_focal_length",
    "converter.eta_mod",      "converter.inter_half_distance",
    "converter.hwp_angle_deg", "converter.qwp_angle_deg",
    "converter.observation_distance", "converter.pad_factor",
    "converter.band_limit",   "field.input",
    "polarizer.angles_deg",   "polarizer.ring_radius",
    "polarizer.inner_radius", "polarizer.outer_radius",
    "stokes.n_angles",        "stokes.offset_deg",
    "stokes.frame_format",    "stokes.frames_dir",
    "stokes.manifest",        "stokes.floor",
    "stokes.export_csv",      "squeeze.input_db",
    "squeeze.input_uncertainty_db", "squeeze.transmissions",
    "squeeze.target_db",      "report.modes",
    "report.eta_mod",
};

double deg(double d) { return d * kPi / 180.0; }

}  // namespace

void check_known_keys(const Config& config) {
  for (const auto& key : config.keys()) {
    if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end()) {
      throw ConfigError("unknown field '" + key + "'", config.line(key));
    }
  }
}

GridSpec grid_from(const Config& c) {
  const int n = c.get_int("grid.n", 512);
  const double extent = c.get_double("grid.extent", 8e-3);
  if (n < 2 || !(extent > 0.0)) throw ConfigError("grid: need n >= 2 and extent > 0", c.line("grid.n"));
  return GridSpec::square(n, extent);
}

double w0_from(const Config& c) {
  const double w0 = c.get_double("beam.w0", 1e-3);
  if (!(w0 > 0.0)) throw ConfigError("field 'beam.w0' must be > 0", c.line("beam.w0"));
  return w0;
}

double wavelength_from(const Config& c) {
  const double lambda = c.get_double("beam.wavelength", 1.56e-6);
  if (!(lambda > 0.0)) throw ConfigError("field 'beam.wavelength' must be > 0", c.line("beam.wavelength"));
  return lambda;
}

void check_mode_range(int p, int l, bool extended) {
  if (p < 0) throw ConfigError("mode p must be >= 0");
  if (!extended && (p > 1 || std::abs(l) > 3)) {
    throw ConfigError("mode (p=" + std::to_string(p) + ", l=" + std::to_string(l) +
                      ") outside p <= 1, |l| <= 3; pass --extended to allow it");
  }
}

VectorBeamPreset preset_from(const Config& c, bool extended) {
  VectorBeamPreset preset;
  preset.p = c.get_int("mode.p", 0);
  preset.l = c.get_int("mode.l", 1);
  const std::string flavor = c.get_string("mode.flavor", "radial");
  if (flavor == "radial") {
    preset.flavor = BeamFlavor::kRadialLike;
  } else if (flavor == "azimuthal") {
    preset.flavor = BeamFlavor::kAzimuthalLike;
  } else {
    throw ConfigError("field 'mode.flavor' must be radial or azimuthal, got '" + flavor + "'",
                      c.line("mode.flavor"));
  }
  if (preset.l < 1) throw ConfigError("field 'mode.l' must be >= 1 for a vector beam", c.line("mode.l"));
  check_mode_range(preset.p, preset.l, extended);
  return preset;
}

MaskPair masks_from(const Config& c, const GridSpec& grid, bool extended) {
  const std::string source = c.get_string("masks.source", "preset");
  std::optional<MaskPair> masks;
  if (source == "file") {
    const std::string a = c.require_string("masks.a_path");
    const std::string b = c.require_string("masks.b_path");
    masks = MaskPair{read_mask_pgm(a, grid.dx(), grid.dy()), read_mask_pgm(b, grid.dx(), grid.dy())};
    require_same_grid(grid, masks->a.grid(), "masks.a_path");
    require_same_grid(grid, masks->b.grid(), "masks.b_path");
  } else if (source == "preset") {
    const double lambda = wavelength_from(c);
    const double kinoform = c.get_double("masks.kinoform_f", 0.0);
    const MaskTweak ta{c.get_double("masks.a_waist_scale", 1.0), c.get_double("masks.a_focal_length", kinoform)};
    const MaskTweak tb{c.get_double("masks.b_waist_scale", 1.0), c.get_double("masks.b_focal_length", kinoform)};
    masks = preset_masks(preset_from(c, extended), w0_from(c), grid, ta, tb, lambda);
  } else {
    throw ConfigError("field 'masks.source' must be preset or file, got '" + source + "'", c.line("masks.source"));
  }
  const int levels = c.get_int("masks.levels", 0);
  if (levels != 0) {
    if (levels < 2) throw ConfigError("field 'masks.levels' must be 0 or >= 2", c.line("masks.levels"));
    masks->a = quantize(masks->a, levels);
    masks->b = quantize(masks->b, levels);
  }
  return std::move(*masks);
}

ConversionConfig conversion_from(const Config& c, const GridSpec& grid, MaskPair masks) {
  ConversionConfig cfg(grid, std::move(masks.a), std::move(masks.b));
  cfg.w0 = w0_from(c);
  cfg.wavelength = wavelength_from(c);
  cfg.eta_mod = c.get_double("converter.eta_mod", 0.8);
  cfg.inter_half_distance = c.get_double("converter.inter_half_distance", 0.0);
  cfg.hwp_angle = deg(c.get_double("converter.hwp_angle_deg", 45.0));
  cfg.qwp_angle = deg(c.get_double("converter.qwp_angle_deg", 45.0));
  cfg.observation_distance = c.get_double("converter.observation_distance", 0.0);
  cfg.propagation.pad_factor = c.get_int("converter.pad_factor", 2);
  cfg.propagation.band_limit = c.get_bool("converter.band_limit", true);
  if (!(cfg.eta_mod >= 0.0 && cfg.eta_mod <= 1.0)) {
    throw ConfigError("field 'converter.eta_mod' must lie in [0, 1]", c.line("converter.eta_mod"));
  }
  if (cfg.propagation.pad_factor < 1) {
    throw ConfigError("field 'converter.pad_factor' must be >= 1", c.line("converter.pad_factor"));
  }
  return cfg;
}

VectorField field_from(const Config& c, bool extended) {
  if (c.has("field.input")) return read_vector_vbf(c.require_string("field.input"));
  const GridSpec grid = grid_from(c);
  return convert(conversion_from(c, grid, masks_from(c, grid, extended)));
}

std::vector<std::pair<int, int>> modes_from(const Config& c, std::string_view key,
                                            const std::vector<std::pair<int, int>>& fallback) {
  if (!c.has(key)) return fallback;
  const std::string text = c.require_string(key);
  std::vector<std::pair<int, int>> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(pos, comma - pos);
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char ch) { return std::isspace(ch); }),
               item.end());
    const auto colon = item.find(':');
    int p = 0;
    int l = 0;
    const bool ok = colon != std::string::npos &&
                    std::from_chars(item.data(), item.data() + colon, p).ptr == item.data() + colon &&
                    std::from_chars(item.data() + colon + 1, item.data() + item.size(), l).ptr ==
                        item.data() + item.size();
    if (!ok) {
      throw ConfigError("field '" + std::string(key) + "' expects p:l pairs, got '" + item + "'", c.line(key));
    }
    out.emplace_back(p, l);
    pos = comma + 1;
  }
  return out;
}

std::string fmt(double v) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, end) : std::string("nan");
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw IoError("write failed: " + path.string());
}

void write_sidecar(const std::filesystem::path& path, const Entries& entries) {
  std::string text;
  for (const auto& [k, v] : entries) text += k + " = " + v + "\n";
  write_text(path, text);
}

}  // namespace vecbeam::cli
