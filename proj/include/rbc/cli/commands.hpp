#pragma once

/// \file
/// Subcommand bodies for rbcsim. Each writes CSV (or a report) to `out`,
/// diagnostics to `err`, and returns the process exit code.

#include <iosfwd>
#include <string>
#include <vector>

#include "rbc/channel.hpp"
#include "rbc/cli/config.hpp"
#include "rbc/verify.hpp"

namespace rbc::cli
{

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_verify_failed = 2;

inline constexpr const char* tool_name = "rbcsim";
inline constexpr const char* tool_version = "0.1.0";

/// Rows `p_s_w,d_m,p_e_w` for each of cfg.curve.powers, d from d_min to
/// d_max inclusive in `step` increments.
int cmd_channel(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Rows `p_s_w,d_max_m,h_m,r_m` for cfg.curve.powers at cfg.sim.fov. Powers
/// without a finite range get `no_coverage` or `unbounded` in the d_max
/// column and empty h, r.
int cmd_coverage(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Rows `<sweep>,scheduler,e_sa_wh,sd_wh,n_runs` for cfg.sim.scheduler.
int cmd_simulate(const RunConfig& cfg, unsigned threads, std::ostream& out, std::ostream& err);

/// Rows `<sweep>,e_sa_cdc_wh,e_sa_rrc_wh,d_sa_wh` on paired streams.
int cmd_compare(const RunConfig& cfg, unsigned threads, std::ostream& out, std::ostream& err);

/// Runs every acceptance criterion; exit_verify_failed if any fails.
int cmd_verify(const verify::Options& opt, bool show_timing, std::ostream& out);

/// Manifest text: `#` provenance lines followed by the resolved config, so
/// it can be passed back as --config to regenerate the output.
std::string make_manifest(const std::string& command, const RunConfig& cfg,
                          const std::vector<std::string>& outputs);

} // namespace rbc::cli
