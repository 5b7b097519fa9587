#include "rbc/cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <exception>
#include <ostream>
#include <sstream>

#include "rbc/cli/csv.hpp"
#include "rbc/coverage.hpp"
#include "rbc/errors.hpp"
#include "rbc/simulation.hpp"

namespace rbc::cli
{
namespace
{

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

int cmd_channel(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const ChannelParams& params = cfg.sim.channel;
    const DistanceSweep& sweep = cfg.curve;
    const int precision = cfg.precision;
    try
    {
        params.validate();
    }
    catch (const std::invalid_argument& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    if (!(sweep.step > 0.0) || !(sweep.d_min >= 0.0) || !(sweep.d_max >= sweep.d_min) ||
        !std::isfinite(sweep.d_max))
    {
        err << "error: distance range needs 0 <= d-min <= d-max and step > 0\n";
        return exit_usage;
    }
    if (sweep.powers.empty())
    {
        err << "error: no input powers given\n";
        return exit_usage;
    }
    for (double p : sweep.powers)
    {
        if (!(p >= 0.0))
        {
            err << "error: input power must be non-negative, got " << p << '\n';
            return exit_usage;
        }
    }

    // Tolerate rounding in (d_max - d_min) / step so the end point is kept.
    const auto n = static_cast<long>(std::floor((sweep.d_max - sweep.d_min) / sweep.step + 1e-9));
    write_row(out, {"p_s_w", "d_m", "p_e_w"});
    for (double p_s : sweep.powers)
    {
        for (long k = 0; k <= n; ++k)
        {
            const double d = sweep.d_min + k * sweep.step;
            write_row(out, {format_number(p_s, precision), format_number(d, precision),
                            format_number(output_electric_power(params, p_s, d), precision)});
        }
    }
    return exit_ok;
}

int cmd_coverage(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const ChannelParams& params = cfg.sim.channel;
    const std::vector<double>& powers = cfg.curve.powers;
    const double fov = cfg.sim.fov;
    const int precision = cfg.precision;
    try
    {
        params.validate();
    }
    catch (const std::invalid_argument& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    if (!(fov > 0.0 && fov < 180.0))
    {
        err << "error: fov must lie in (0, 180) degrees\n";
        return exit_usage;
    }
    if (powers.empty())
    {
        err << "error: no input powers given\n";
        return exit_usage;
    }
    for (double p : powers)
    {
        if (!(p >= 0.0))
        {
            err << "error: input power must be non-negative, got " << p << '\n';
            return exit_usage;
        }
    }

    write_row(out, {"p_s_w", "d_max_m", "h_m", "r_m"});
    for (double p_s : powers)
    {
        const TransmissionRange range = max_transmission_distance(params, p_s);
        if (!range.finite())
        {
            write_row(out, {format_number(p_s, precision), to_string(range.kind), "", ""});
            continue;
        }
        const CoverageCone cone = cone_from_distance(range.meters, fov);
        write_row(out, {format_number(p_s, precision), format_number(cone.d_max, precision),
                        format_number(cone.h, precision), format_number(cone.r, precision)});
    }
    return exit_ok;
}

int cmd_simulate(const RunConfig& cfg, unsigned threads, std::ostream& out, std::ostream& err)
{
    std::ostringstream body;
    try
    {
        write_row(body, {sweep_column(cfg), "scheduler", "e_sa_wh", "sd_wh", "n_runs"});
        for (double value : sweep_points(cfg))
        {
            const SimConfig sim = at_sweep_point(cfg, value);
            const MonteCarloResult mc = monte_carlo(sim, threads);
            write_row(body, {format_number(value, cfg.precision), to_string(sim.scheduler),
                             format_number(mc.e_sa, cfg.precision),
                             format_number(mc.sd, cfg.precision), std::to_string(sim.n_runs)});
        }
    }
    catch (const std::exception& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    out << body.str();
    return exit_ok;
}

int cmd_compare(const RunConfig& cfg, unsigned threads, std::ostream& out, std::ostream& err)
{
    std::ostringstream body;
    try
    {
        write_row(body, {sweep_column(cfg), "e_sa_cdc_wh", "e_sa_rrc_wh", "d_sa_wh"});
        for (double value : sweep_points(cfg))
        {
            const ComparisonResult cmp = compare(at_sweep_point(cfg, value), threads);
            write_row(body, {format_number(value, cfg.precision),
                             format_number(cmp.cdc.e_sa, cfg.precision),
                             format_number(cmp.rrc.e_sa, cfg.precision),
                             format_number(cmp.d_sa, cfg.precision)});
        }
    }
    catch (const std::exception& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    out << body.str();
    return exit_ok;
}

int cmd_verify(const verify::Options& opt, bool show_timing, std::ostream& out)
{
    const auto reports = verify::run_all(opt);
    verify::print_report(out, reports, show_timing);
    const bool ok = verify::all_passed(reports);
    out << (ok ? "all criteria passed\n" : "verification FAILED\n");
    return ok ? exit_ok : exit_verify_failed;
}

std::string make_manifest(const std::string& command, const RunConfig& cfg,
                          const std::vector<std::string>& outputs)
{
    std::ostringstream os;
    os << "# " << tool_name << " run manifest\n";
    os << "# tool = " << tool_name << ' ' << tool_version << '\n';
    os << "# command = " << command << '\n';
    os << "# timestamp = " << utc_timestamp() << '\n';
    for (const auto& path : outputs)
        os << "# output = " << path << '\n';
    os << serialize(cfg);
    return os.str();
}

} // namespace rbc::cli
