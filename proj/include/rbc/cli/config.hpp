#pragma once

/// \file
/// Flat key-value run configuration.
///
///     # comment
///     sim.p_s = 200
///     sim.scheduler = cdc
///     channel.f = 0.88
///     sweep.variable = n_r
///     sweep.values = 1, 5, 10
///
/// Keys are dotted `section.name`; unknown keys are errors.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rbc/simulation.hpp"

namespace rbc::cli
{

/// A bad key or value. `key()` names the offending setting.
class ConfigError : public std::runtime_error
{
  public:
    ConfigError(std::string key, const std::string& message);
    const std::string& key() const { return key_; }

  private:
    std::string key_;
};

struct SweepSpec
{
    std::string variable; ///< "n_r", "t_o", "p_s" or empty for a single point
    std::vector<double> values;
};

/// Distance sweep for the power curve and coverage tables.
struct DistanceSweep
{
    std::vector<double> powers = {50.0, 100.0, 150.0, 200.0};
    double d_min = 0.0;
    double d_max = 20.0;
    double step = 0.1;
};

struct RunConfig
{
    SimConfig sim;
    SweepSpec sweep;
    DistanceSweep curve;
    int precision = 6; ///< significant digits in CSV output
};

/// Every accepted key, in serialization order.
const std::vector<std::string>& known_keys();

void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

/// Parse `key = value` lines over `base`. `source` is used in messages.
RunConfig parse_config(std::istream& in, RunConfig base = {}, const std::string& source = "config");
RunConfig load_config_file(const std::string& path, RunConfig base = {});

/// "key=value" as given to --set.
void apply_assignment(RunConfig& cfg, std::string_view assignment);

/// Lossless `key = value` text that parse_config reads back to the same config.
std::string serialize(const RunConfig& cfg);

/// The sweep points: sweep.values, or the configured value of the sweep
/// variable (n_r when none) as a single point.
std::vector<double> sweep_points(const RunConfig& cfg);

/// cfg.sim with the sweep variable set to `value`.
SimConfig at_sweep_point(const RunConfig& cfg, double value);

/// Header name of the sweep column.
std::string sweep_column(const RunConfig& cfg);

} // namespace rbc::cli
