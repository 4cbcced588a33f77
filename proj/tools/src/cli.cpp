#include "cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <ostream>

#include "commands.hpp"
#include "vecbeam/errors.hpp"
#include "vecbeam/parallel.hpp"

namespace vecbeam::cli {
namespace {

struct CommandSpec {
  const char* name;
  const char* help;
  void (*fn)(const RunContext&, std::ostream&);
};

constexpr CommandSpec kCommands[] = {
    {"mask", "write the two SLM phase masks as 8-bit PGM", cmd_mask},
    {"convert", "run the double-reflection converter and export the field", cmd_convert},
    {"polarizer-scan", "intensity behind a rotated linear polarizer", cmd_polarizer_scan},
    {"stokes-sim", "simulate rotating-QWP camera frames plus a manifest", cmd_stokes_sim},
    {"stokes-analyze", "Fourier Stokes reconstruction from frames", cmd_stokes_analyze},
    {"squeeze-budget", "propagate squeezing through a loss budget", cmd_squeeze_budget},
    {"report", "overlap, Stokes and squeezing summary over several modes", cmd_report},
};

struct Options {
  std::string config_path;
  std::string out_dir = "vecbeam_out";
  bool extended = false;
  std::vector<std::string> overrides;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Squeezed vector beam simulator", "vecbeam"};
  app.require_subcommand(1, 1);
  Options opt;
  for (const auto& spec : kCommands) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    sub->add_option("--config", opt.config_path, "sectioned key = value configuration file");
    sub->add_option("--out", opt.out_dir, "output directory (created if missing)");
    sub->add_flag("--extended", opt.extended, "allow modes beyond p <= 1, |l| <= 3");
    sub->add_option("overrides", opt.overrides, "section.key=value overrides");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  const CommandSpec* chosen = nullptr;
  for (const auto& spec : kCommands) {
    if (app.got_subcommand(spec.name)) chosen = &spec;
  }

  try {
    apply_thread_limit_from_env();
    RunContext ctx;
    if (!opt.config_path.empty()) ctx.config = Config::load(opt.config_path);
    ctx.config.apply_overrides(opt.overrides);
    check_known_keys(ctx.config);
    ctx.out_dir = opt.out_dir;
    ctx.extended = opt.extended;
    std::error_code ec;
    std::filesystem::create_directories(ctx.out_dir, ec);
    if (ec) throw IoError("cannot create output directory " + ctx.out_dir.string() + ": " + ec.message());
    write_text(ctx.out_dir / "run.ini", ctx.config.to_string());
    chosen->fn(ctx, out);
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DomainError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ShapeError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const PreconditionError& e) {
    err << "numerical precondition violated: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace vecbeam::cli
