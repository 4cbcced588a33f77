#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

#include "manifest.hpp"
#include "vecbeam/errors.hpp"
#include "vecbeam/laguerre.hpp"
#include "vecbeam/pgm.hpp"
#include "vecbeam/polarimetry.hpp"
#include "vecbeam/ring_analysis.hpp"
#include "vecbeam/squeezing.hpp"
#include "vecbeam/vbf.hpp"

namespace vecbeam::cli {
namespace fs = std::filesystem;

namespace {

double deg(double d) { return d * kPi / 180.0; }
double to_deg(double r) { return r * 180.0 / kPi; }

std::string flavor_name(BeamFlavor f) { return f == BeamFlavor::kRadialLike ? "radial" : "azimuthal"; }

// Angle label safe for file names: 22.5 -> "022p5".
std::string angle_label(double degrees) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%07.3f", degrees);
  std::string s(buf);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  for (auto& ch : s) {
    if (ch == '.') ch = 'p';
    if (ch == '-') ch = 'm';
  }
  return s;
}

Entries intensity_entries(const GridSpec& g, double scale) {
  return {{"format", "pgm16"},  {"scale", fmt(scale)},     {"nx", std::to_string(g.nx())},
          {"ny", std::to_string(g.ny())}, {"dx", fmt(g.dx())}, {"dy", fmt(g.dy())}};
}

void export_intensity(const fs::path& stem, const RealRaster& r) {
  const double scale = write_intensity_pgm(fs::path(stem).replace_extension(".pgm"), r);
  write_sidecar(fs::path(stem).replace_extension(".meta.txt"), intensity_entries(r.grid, scale));
}

void export_stokes(const fs::path& dir, const std::string& prefix, const StokesMaps& s, bool csv) {
  const std::pair<const char*, const RealRaster*> maps[] = {{"s0", &s.s0}, {"s1", &s.s1}, {"s2", &s.s2}, {"s3", &s.s3}};
  for (const auto& [name, raster] : maps) {
    write_vbf(dir / (prefix + name + ".vbf"), *raster);
    if (csv) write_csv_grid(dir / (prefix + name + ".csv"), *raster);
  }
}

Entries summary_entries(const StokesSummary& s) {
  return {{"mean_degree_of_polarization", fmt(s.mean_degree_of_polarization)},
          {"s1_fraction", fmt(s.s1_fraction)},
          {"s2_fraction", fmt(s.s2_fraction)},
          {"s3_fraction", fmt(s.s3_fraction)},
          {"s3_power_fraction", fmt(s.s3_power_fraction)}};
}

// Radius of the brightest annulus of `r`, scanned in pixel steps.
double brightest_radius(const RealRaster& r) {
  const double limit = 0.45 * std::min(r.grid.extent_x(), r.grid.extent_y());
  const double step = std::min(r.grid.dx(), r.grid.dy());
  double best_r = step;
  double best = -1.0;
  for (double radius = step; radius < limit; radius += step) {
    const auto ring = sample_ring(r, radius, 90);
    const double mean = std::accumulate(ring.begin(), ring.end(), 0.0) / double(ring.size());
    if (mean > best) {
      best = mean;
      best_r = radius;
    }
  }
  return best_r;
}

void print_entries(std::ostream& log, const Entries& entries) {
  for (const auto& [k, v] : entries) log << "  " << k << " = " << v << '\n';
}

}  // namespace

void cmd_mask(const RunContext& ctx, std::ostream& log) {
  const Config& c = ctx.config;
  const GridSpec grid = grid_from(c);
  if (c.get_string("masks.source", "preset") != "preset") {
    throw ConfigError("mask: masks.source must be preset for mask synthesis");
  }
  const VectorBeamPreset preset = preset_from(c, ctx.extended);
  const MaskPair masks = masks_from(c, grid, ctx.extended);
  write_mask_pgm(ctx.out_dir / "mask_a.pgm", masks.a);
  write_mask_pgm(ctx.out_dir / "mask_b.pgm", masks.b);
  write_sidecar(ctx.out_dir / "masks.meta.txt",
                {{"p", std::to_string(preset.p)},
                 {"l", std::to_string(preset.l)},
                 {"flavor", flavor_name(preset.flavor)},
                 {"w0", fmt(w0_from(c))},
                 {"wavelength", fmt(wavelength_from(c))},
                 {"levels", std::to_string(c.get_int("masks.levels", 0))},
                 {"kinoform_f", fmt(c.get_double("masks.kinoform_f", 0.0))},
                 {"mask_b_offset", fmt(mask_b_offset(preset.flavor))},
                 {"nx", std::to_string(grid.nx())},
                 {"ny", std::to_string(grid.ny())},
                 {"dx", fmt(grid.dx())},
                 {"dy", fmt(grid.dy())},
                 {"pgm_encoding", "value = round(phase / 2pi * 255)"}});
  log << "mask: wrote mask_a.pgm, mask_b.pgm (p=" << preset.p << ", l=+-" << preset.l << ", "
      << flavor_name(preset.flavor) << ")\n";
}

void cmd_convert(const RunContext& ctx, std::ostream& log) {
  const Config& c = ctx.config;
  const GridSpec grid = grid_from(c);
  const ConversionConfig cfg = conversion_from(c, grid, masks_from(c, grid, ctx.extended));
  const VectorField out = convert(cfg);
  write_vbf(ctx.out_dir / "field.vbf", out);
  RealRaster total = intensity(out.h());
  const RealRaster iv = intensity(out.v());
  for (std::size_t k = 0; k < total.values.size(); ++k) total.values[k] += iv.values[k];
  export_intensity(ctx.out_dir / "intensity", total);

  Entries summary{{"power", fmt(power(out))}, {"eta_mod", fmt(cfg.eta_mod)}};
  if (c.get_string("masks.source", "preset") == "preset") {
    const VectorBeamPreset preset = preset_from(c, ctx.extended);
    const VectorField target = target_superposition(preset, cfg.w0, cfg.wavelength, grid, cfg.observation_distance);
    summary.emplace_back("target_overlap", fmt(overlap_fraction(target, out)));
  }
  for (auto& e : summary_entries(summarize(stokes_direct(out)))) summary.push_back(std::move(e));
  write_sidecar(ctx.out_dir / "convert_summary.txt", summary);
  log << "convert: wrote field.vbf, intensity.pgm\n";
  print_entries(log, summary);
}

void cmd_polarizer_scan(const RunContext& ctx, std::ostream& log) {
  const Config& c = ctx.config;
  const VectorField f = field_from(c, ctx.extended);
  const double w0 = w0_from(c);
  const double ring = c.get_double("polarizer.ring_radius", w0);
  const double inner = c.get_double("polarizer.inner_radius", 0.5 * w0);
  const double outer = c.get_double("polarizer.outer_radius", 1.5 * w0);
  std::string csv = "axis_deg,file,power,arm_count,lobe_harmonic,lobe_rotation_deg\n";
  for (double a : c.get_doubles("polarizer.angles_deg", {0.0, 45.0, 90.0, 135.0})) {
    const RealRaster img = polarizer_image(f, deg(a));
    const std::string name = "polarizer_" + angle_label(a);
    export_intensity(ctx.out_dir / name, img);
    const int arms = spiral_arm_count(img, ring);
    const LobeRotation rot = lobe_rotation(img, inner, outer);
    csv += fmt(a) + "," + name + ".pgm," + fmt(img.sum() * f.grid().pixel_area()) + "," + std::to_string(arms) +
           "," + std::to_string(rot.harmonic) + "," + fmt(to_deg(rot.rotation)) + "\n";
    log << "polarizer " << fmt(a) << " deg: " << arms << " maxima on r=" << fmt(ring) << " m, lobe rotation "
        << fmt(to_deg(rot.rotation)) << " deg\n";
  }
  write_text(ctx.out_dir / "polarizer_scan.csv", csv);
}

void cmd_stokes_sim(const RunContext& ctx, std::ostream& log) {
  const Config& c = ctx.config;
  const VectorField f = field_from(c, ctx.extended);
  const int n = c.get_int("stokes.n_angles", 16);
  const double offset = c.get_double("stokes.offset_deg", 0.0);
  const std::string format = c.get_string("stokes.frame_format", "vbf");
  if (format != "vbf" && format != "pgm") {
    throw ConfigError("field 'stokes.frame_format' must be vbf or pgm", c.line("stokes.frame_format"));
  }
  if (n < 1) throw ConfigError("field 'stokes.n_angles' must be >= 1", c.line("stokes.n_angles"));
  std::vector<double> angles(n);
  for (int k = 0; k < n; ++k) angles[k] = deg(offset + 180.0 * k / n);
  const FrameStack stack = simulate_qwp_scan(f, angles);

  double scale = 0.0;
  for (const auto& fr : stack.frames) scale = std::max(scale, fr.max());
  std::vector<ManifestEntry> entries;
  for (int k = 0; k < n; ++k) {
    char name[32];
    std::snprintf(name, sizeof name, "frame_%03d.%s", k, format.c_str());
    if (format == "vbf") {
      write_vbf(ctx.out_dir / name, stack.frames[k]);
    } else {
      // One common scale so relative frame intensities survive.
      write_intensity_pgm(ctx.out_dir / name, stack.frames[k], scale);
    }
    entries.push_back({offset + 180.0 * k / n, name});
  }
  write_manifest(ctx.out_dir / "manifest.txt", entries);
  Entries meta = intensity_entries(f.grid(), scale);
  meta[0].second = format == "vbf" ? "vbf1" : "pgm16";
  write_sidecar(ctx.out_dir / "frames.meta.txt", meta);
  export_stokes(ctx.out_dir, "direct_", stokes_direct(f), c.get_bool("stokes.export_csv", false));
  log << "stokes-sim: wrote " << n << " frames (" << format << ") and manifest.txt\n";
}

void cmd_stokes_analyze(const RunContext& ctx, std::ostream& log) {
  const Config& c = ctx.config;
  const fs::path frames_dir = c.require_string("stokes.frames_dir");
  const fs::path manifest = c.get_string("stokes.manifest", (frames_dir / "manifest.txt").string());
  const auto entries = read_manifest(manifest);

  // Pixel pitch and PGM scale come from the frame sidecar when present.
  double dx = grid_from(c).dx();
  double dy = grid_from(c).dy();
  double scale = 1.0;
  if (fs::exists(frames_dir / "frames.meta.txt")) {
    const Config meta = Config::load((frames_dir / "frames.meta.txt").string());
    dx = meta.get_double("dx", dx);
    dy = meta.get_double("dy", dy);
    scale = meta.get_double("scale", scale);
  }

  FrameStack stack;
  for (const auto& e : entries) {
    const fs::path file = manifest.parent_path() / e.filename;
    const std::string ext = file.extension().string();
    RealRaster frame = ext == ".vbf" ? read_real_vbf(file) : read_intensity_pgm(file, dx, dy, scale);
    if (!stack.frames.empty() && !(frame.grid == stack.frames.front().grid)) {
      throw IoError("frame " + e.filename + " does not match the grid of the first frame");
    }
    stack.angles.push_back(deg(e.angle_degrees));
    stack.frames.push_back(std::move(frame));
  }
  validate_uniform_angles(stack.angles);
  const StokesMaps s = stokes_from_frames(stack);
  export_stokes(ctx.out_dir, "", s, c.get_bool("stokes.export_csv", false));
  const Entries summary = summary_entries(summarize(s, c.get_double("stokes.floor", 1e-4)));
  write_sidecar(ctx.out_dir / "stokes_summary.txt", summary);
  log << "stokes-analyze: " << entries.size() << " frames\n";
  print_entries(log, summary);
}

void cmd_squeeze_budget(const RunContext& ctx, std::ostream& log) {
  const Config& c = ctx.config;
  const double input_db = c.get_double("squeeze.input_db", -3.4);
  std::optional<double> unc;
  if (c.has("squeeze.input_uncertainty_db")) unc = c.require_double("squeeze.input_uncertainty_db");
  const auto etas = c.get_doubles("squeeze.transmissions", {0.36});
  const BudgetReport report = budget(input_db, etas, unc);
  std::string table = format_budget_table(report);
  if (c.has("squeeze.target_db")) {
    const double eta = loss_for_target(input_db, c.require_double("squeeze.target_db"));
    char line[96];
    std::snprintf(line, sizeof line, "transmission explaining target: %.6f (loss %.2f %%)\n", eta, 100.0 * (1 - eta));
    table += line;
  }
  write_text(ctx.out_dir / "budget.txt", table);
  write_text(ctx.out_dir / "budget.csv", format_budget_csv(report));
  log << table;
}

void cmd_report(const RunContext& ctx, std::ostream& log) {
  const Config& c = ctx.config;
  const GridSpec grid = grid_from(c);
  const double w0 = w0_from(c);
  const double lambda = wavelength_from(c);
  const double eta = c.get_double("report.eta_mod", c.get_double("converter.eta_mod", 0.8));
  const auto modes = modes_from(c, "report.modes", {{0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3}});
  const BeamFlavor flavor = preset_from(c, ctx.extended).flavor;

  std::string csv =
      "p,l,flavor,ring_radius,overlap_ideal,s3_power_fraction_ideal,s1_harmonic,s1_harmonic_contrast,stokes_roundtrip_error,"
      "eta_mod,overlap_lossy,s3_power_fraction_lossy,polarizer_maxima_lossy\n";
  std::string text = "vector beam report\n";
  char line[256];
  for (const auto& [p, l] : modes) {
    check_mode_range(p, l, ctx.extended);
    const VectorBeamPreset preset{p, l, flavor};
    Config mode_cfg = c;
    mode_cfg.set("mode.p", std::to_string(p));
    mode_cfg.set("mode.l", std::to_string(l));
    MaskPair masks = masks_from(mode_cfg, grid, ctx.extended);
    ConversionConfig cfg = conversion_from(mode_cfg, grid, masks);
    const VectorField target = target_superposition(preset, w0, lambda, grid, cfg.observation_distance);
    const double ring = brightest_radius(stokes_direct(target).s0);

    cfg.eta_mod = 1.0;
    const VectorField ideal = convert(cfg);
    const StokesMaps s = stokes_direct(ideal);
    const auto h = azimuthal_harmonics(sample_ring(s.s1, ring), 4 * l);
    const double roundtrip =
        max_relative_difference(stokes_from_frames(simulate_qwp_scan(ideal, uniform_qwp_angles(16))), s);
    const double ov_ideal = overlap_fraction(target, ideal);
    const double s3_ideal = summarize(s).s3_power_fraction;

    cfg.eta_mod = eta;
    const VectorField lossy = convert(cfg);
    const double ov_lossy = overlap_fraction(target, lossy);
    const double s3_lossy = summarize(stokes_direct(lossy)).s3_power_fraction;
    const int maxima = spiral_arm_count(polarizer_image(lossy, 0.0), ring);

    csv += std::to_string(p) + "," + std::to_string(l) + "," + flavor_name(flavor) + "," + fmt(ring) + "," + fmt(ov_ideal) + "," +
           fmt(s3_ideal) + "," + std::to_string(dominant_harmonic(h)) + "," + fmt(harmonic_contrast(h)) + "," +
           fmt(roundtrip) + "," + fmt(eta) + "," + fmt(ov_lossy) + "," + fmt(s3_lossy) + "," +
           std::to_string(maxima) + "\n";
    std::snprintf(line, sizeof line,
                  "LG%d%d: overlap %.4f (eta 1) %.4f (eta %.2f), S3 fraction %.2e / %.3f, s1 harmonic %d, "
                  "round trip %.1e, polarizer maxima %d\n",
                  p, l, ov_ideal, ov_lossy, eta, s3_ideal, s3_lossy, dominant_harmonic(h), roundtrip, maxima);
    text += line;
  }

  const double input_db = c.get_double("squeeze.input_db", -3.4);
  const auto etas = c.get_doubles("squeeze.transmissions", {0.36});
  const BudgetReport b = budget(input_db, etas);
  std::snprintf(line, sizeof line, "squeezing: %.2f dB in, %.4f dB out at total transmission %.4f\n", input_db,
                b.output().db(), b.total_transmission());
  text += line;
  write_text(ctx.out_dir / "report.csv", csv);
  write_text(ctx.out_dir / "report.txt", text);
  log << text;
}

}  // namespace vecbeam::cli
