#pragma once

#include <iosfwd>

#include "run_config.hpp"

namespace vecbeam::cli {

void cmd_mask(const RunContext& ctx, std::ostream& log);
void cmd_convert(const RunContext& ctx, std::ostream& log);
void cmd_polarizer_scan(const RunContext& ctx, std::ostream& log);
void cmd_stokes_sim(const RunContext& ctx, std::ostream& log);
void cmd_stokes_analyze(const RunContext& ctx, std::ostream& log);
void cmd_squeeze_budget(const RunContext& ctx, std::ostream& log);
void cmd_report(const RunContext& ctx, std::ostream& log);

}  // namespace vecbeam::cli
