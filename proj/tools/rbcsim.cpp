// rbcsim: command-line front end for the resonant beam charging simulator.
//
//   rbcsim channel  --p-s 50,100 --d-max 8 --step 0.1
//   rbcsim coverage --p-s 50,100,150,200
//   rbcsim simulate --config run.cfg --sweep n_r --values 1,5,10 --out esa.csv
//   rbcsim compare  --p-s 200 --t-o 10800 --sweep n_r --values 1,2,5,10,20
//   rbcsim verify

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rbc/cli/commands.hpp"
#include "rbc/cli/config.hpp"

namespace
{

using namespace rbc::cli;

struct CommonOptions
{
    std::string config_path;
    std::vector<std::string> assignments;
    std::string out_path;
    std::optional<int> precision;
    unsigned threads = 0;
};

// Flag values are applied as `key=value` assignments after the config file
// and --set, so they go through the same validation.
struct FlagOverrides
{
    std::vector<std::pair<std::string, std::string>> pending;

    void bind(CLI::App* app, const std::string& flag, const std::string& key,
              const std::string& help)
    {
        app->add_option_function<std::string>(
            flag, [this, key](const std::string& v) { pending.emplace_back(key, v); }, help);
    }
};

void add_common(CLI::App* app, CommonOptions& common, bool with_output)
{
    app->add_option("--config", common.config_path, "Key-value config file")->check(CLI::ExistingFile);
    app->add_option("--set", common.assignments, "Override a config key: --set sim.p_s=150");
    if (with_output)
    {
        app->add_option("--out", common.out_path,
                        "Write CSV here (plus <out>.manifest) instead of stdout");
        app->add_option("--precision", common.precision, "Significant digits in CSV output")
            ->check(CLI::Range(1, 17));
    }
    app->add_option("--threads", common.threads, "Monte Carlo worker threads (0 = all cores)");
}

RunConfig resolve(const CommonOptions& common, const FlagOverrides& flags)
{
    RunConfig cfg;
    if (!common.config_path.empty())
        cfg = load_config_file(common.config_path, cfg);
    for (const auto& a : common.assignments)
        apply_assignment(cfg, a);
    for (const auto& [key, value] : flags.pending)
        apply_setting(cfg, key, value);
    if (common.precision)
        cfg.precision = *common.precision;
    return cfg;
}

template <typename Command>
int emit(const std::string& name, const CommonOptions& common, const RunConfig& cfg, Command run)
{
    if (common.out_path.empty())
        return run(std::cout);

    std::ofstream out(common.out_path, std::ios::binary);
    if (!out)
    {
        std::cerr << "error: cannot write " << common.out_path << '\n';
        return exit_usage;
    }
    const int code = run(out);
    if (code != exit_ok)
        return code;
    const std::string manifest_path = common.out_path + ".manifest";
    std::ofstream manifest(manifest_path, std::ios::binary);
    manifest << make_manifest(name, cfg, {common.out_path});
    if (!manifest)
    {
        std::cerr << "error: cannot write " << manifest_path << '\n';
        return exit_usage;
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Channel-dependent charge scheduling simulator for resonant beam charging"};
    app.set_version_flag("--version", std::string(tool_name) + " " + tool_version);
    app.require_subcommand(1);

    CommonOptions common;
    FlagOverrides flags;

    auto* channel = app.add_subcommand("channel", "Output power versus distance (CSV)");
    add_common(channel, common, true);
    flags.bind(channel, "--p-s", "curve.p_s", "Input powers [W], comma separated");
    flags.bind(channel, "--d-min", "curve.d_min", "First distance [m]");
    flags.bind(channel, "--d-max", "curve.d_max", "Last distance [m]");
    flags.bind(channel, "--step", "curve.d_step", "Distance step [m]");

    auto* coverage = app.add_subcommand("coverage", "Largest distance and coverage cone (CSV)");
    add_common(coverage, common, true);
    flags.bind(coverage, "--p-s", "curve.p_s", "Input powers [W], comma separated");
    flags.bind(coverage, "--fov", "sim.fov", "Field of view [deg]");

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo average remaining energy (CSV)");
    auto* compare = app.add_subcommand("compare", "CDC versus RRC on paired streams (CSV)");
    for (auto* sub : {simulate, compare})
    {
        add_common(sub, common, true);
        flags.bind(sub, "--p-s", "sim.p_s", "Input power [W]");
        flags.bind(sub, "--n-r", "sim.n_r", "Receiver count");
        flags.bind(sub, "--t-o", "sim.t_o", "Charging horizon [s]");
        flags.bind(sub, "--t-c", "sim.t_c", "Slot length [s]");
        flags.bind(sub, "--init-cone-power", "sim.init_cone_power",
                   "Input power whose cone bounds initial positions [W]");
        flags.bind(sub, "--seed", "sim.seed", "Master seed (u64)");
        flags.bind(sub, "--n-runs", "sim.n_runs", "Monte Carlo runs per point");
        flags.bind(sub, "--mode", "sim.position_mode", "faithful|geometric");
        flags.bind(sub, "--eligibility", "sched.eligibility", "strict|work-conserving");
        flags.bind(sub, "--sweep", "sweep.variable", "n_r|t_o|p_s");
        flags.bind(sub, "--values", "sweep.values", "Sweep values, comma separated");
    }
    flags.bind(simulate, "--scheduler", "sim.scheduler", "cdc|rrc");

    auto* verify = app.add_subcommand("verify", "Run the acceptance criteria");
    add_common(verify, common, false);
    rbc::verify::Options verify_opt;
    verify->add_option("--seed", verify_opt.seed, "Master seed (u64)");
    verify->add_option("--n-runs", verify_opt.n_runs, "Monte Carlo runs per trend point")
        ->check(CLI::PositiveNumber);
    bool show_timing = false;
    verify->add_flag("--timing", show_timing, "Print per-criterion runtimes");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::Success& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return exit_usage;
    }

    RunConfig cfg;
    try
    {
        cfg = resolve(common, flags);
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }

    if (channel->parsed())
        return emit("channel", common, cfg,
                    [&](std::ostream& os) { return cmd_channel(cfg, os, std::cerr); });
    if (coverage->parsed())
        return emit("coverage", common, cfg,
                    [&](std::ostream& os) { return cmd_coverage(cfg, os, std::cerr); });
    if (simulate->parsed())
        return emit("simulate", common, cfg, [&](std::ostream& os) {
            return cmd_simulate(cfg, common.threads, os, std::cerr);
        });
    if (compare->parsed())
        return emit("compare", common, cfg, [&](std::ostream& os) {
            return cmd_compare(cfg, common.threads, os, std::cerr);
        });

    verify_opt.channel = cfg.sim.channel;
    verify_opt.threads = common.threads;
    return cmd_verify(verify_opt, show_timing, std::cout);
}
