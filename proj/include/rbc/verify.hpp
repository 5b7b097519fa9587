#pragma once

/// \file
/// Reproduction and invariant checks for the model, grouped into named
/// criteria. Each criterion carries its own tolerances and runtime budget.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rbc/channel.hpp"

namespace rbc::verify
{

struct Check
{
    std::string label;
    std::string expected;
    std::string actual;
    std::string tolerance;
    bool passed = false;
};

struct CriterionReport
{
    std::string name;
    std::vector<Check> checks;
    double seconds = 0.0;
    double budget_seconds = 0.0;
    std::string error; ///< set when the criterion threw

    bool within_budget() const { return seconds < budget_seconds; }
    bool passed() const;
};

struct Options
{
    ChannelParams channel;
    std::uint64_t seed = 20200501;
    std::uint32_t n_runs = 200;
    unsigned threads = 0; ///< 0 = hardware concurrency
};

/// Reference values of the published distance and coverage tables.
struct TableRow
{
    double p_s;
    double d_max;
    double h;
    double r;
};
const std::vector<TableRow>& reference_table();

CriterionReport check_distance_table(const Options& opt);
CriterionReport check_coverage_table(const Options& opt);
CriterionReport check_oracle_equivalence(const Options& opt);
CriterionReport check_power_curve_shape(const Options& opt);
CriterionReport check_trend_receivers(const Options& opt);
CriterionReport check_trend_duration(const Options& opt);
CriterionReport check_trend_power(const Options& opt);
CriterionReport check_cdc_advantage(const Options& opt);
CriterionReport check_invariants(const Options& opt);
CriterionReport check_strict_idle_slot(const Options& opt);

/// Every criterion, in a fixed order.
std::vector<CriterionReport> run_all(const Options& opt);

/// Table of expected / actual / tolerance rows plus one PASS/FAIL line per
/// criterion. Contains no timings when `show_timing` is false, so repeated
/// runs print identical text.
void print_report(std::ostream& os, const std::vector<CriterionReport>& reports,
                  bool show_timing = true);

bool all_passed(const std::vector<CriterionReport>& reports);

} // namespace rbc::verify
