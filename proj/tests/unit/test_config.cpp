#include <doctest.h>

#include <sstream>

#include "rbc/cli/config.hpp"
#include "rbc/cli/csv.hpp"

using namespace rbc;
using namespace rbc::cli;

TEST_CASE("parse a config file")
{
    std::istringstream in(R"(# experiment E2
sim.p_s = 150
sim.n_r=12
sim.init_cone_power = 200   # cone of the strongest transmitter
sim.position_mode = geometric
sim.scheduler = rrc
sched.eligibility = work-conserving
sched.normalized = true
channel.l = 0.05
sweep.variable = t_o
sweep.values = 3600, 7200,10800

output.precision = 8
)");
    const RunConfig cfg = parse_config(in);
    CHECK(cfg.sim.p_s == 150.0);
    CHECK(cfg.sim.n_r == 12);
    CHECK(cfg.sim.init_cone_power == 200.0);
    CHECK(cfg.sim.position_mode == PositionMode::geometric);
    CHECK(cfg.sim.scheduler == SchedulerKind::rrc);
    CHECK(cfg.sim.scheduling.eligibility == EligibilityMode::work_conserving);
    CHECK(cfg.sim.scheduling.normalized);
    CHECK(cfg.sim.channel.l == 0.05);
    CHECK(cfg.sweep.variable == "t_o");
    CHECK(cfg.sweep.values == std::vector<double>{3600, 7200, 10800});
    CHECK(cfg.precision == 8);
}

TEST_CASE("errors name the offending key")
{
    RunConfig cfg;
    auto key_of = [&](const std::string& k, const std::string& v) {
        try
        {
            apply_setting(cfg, k, v);
        }
        catch (const ConfigError& e)
        {
            return e.key();
        }
        return std::string("<no error>");
    };
    CHECK(key_of("sim.nope", "1") == "sim.nope");
    CHECK(key_of("sim.p_s", "lots") == "sim.p_s");
    CHECK(key_of("sim.n_r", "-3") == "sim.n_r");
    CHECK(key_of("sim.n_r", "2.5") == "sim.n_r");
    CHECK(key_of("sim.seed", "18446744073709551616") == "sim.seed");
    CHECK(key_of("sim.position_mode", "spherical") == "sim.position_mode");
    CHECK(key_of("sweep.variable", "v_max") == "sweep.variable");
    CHECK(key_of("sweep.values", "1,,2") == "sweep.values");
    CHECK(key_of("output.precision", "30") == "output.precision");

    std::istringstream bad("sim.p_s = 100\nthis line has no equals\n");
    CHECK_THROWS_AS(parse_config(bad), ConfigError);

    CHECK_THROWS_AS(apply_assignment(cfg, "sim.p_s"), ConfigError);
    apply_assignment(cfg, "sim.p_s=123.5");
    CHECK(cfg.sim.p_s == 123.5);
}

TEST_CASE("serialization reads back to the same config")
{
    RunConfig cfg;
    cfg.sim.p_s = 137.123456789012345;
    cfg.sim.seed = 18446744073709551615ULL;
    cfg.sim.channel.lambda = 1.0641234567e-6;
    cfg.sim.scheduling.c_e = 0.3;
    cfg.sim.init_cone_power = 200.0;
    cfg.sweep = {"p_s", {50.0, 0.1, 1.0 / 3.0}};
    cfg.curve.powers = {75.5};
    cfg.precision = 12;

    std::istringstream in(serialize(cfg));
    const RunConfig back = parse_config(in);
    CHECK(serialize(back) == serialize(cfg));
    CHECK(back.sim.p_s == cfg.sim.p_s);
    CHECK(back.sim.seed == cfg.sim.seed);
    CHECK(back.sim.channel.lambda == cfg.sim.channel.lambda);
    CHECK(back.sweep.values == cfg.sweep.values);
    CHECK(back.sim.init_cone_power == 200.0);

    for (const auto& key : known_keys())
        CHECK(serialize(cfg).find(key + " = ") != std::string::npos);

    RunConfig unset;
    std::istringstream in2(serialize(unset));
    CHECK_FALSE(parse_config(in2).sim.init_cone_power.has_value());
}

TEST_CASE("sweep points")
{
    RunConfig cfg;
    cfg.sim.n_r = 7;
    CHECK(sweep_points(cfg) == std::vector<double>{7});
    CHECK(sweep_column(cfg) == "n_r");

    cfg.sweep = {"t_o", {}};
    CHECK(sweep_points(cfg) == std::vector<double>{cfg.sim.t_o});
    CHECK(sweep_column(cfg) == "t_o_s");

    cfg.sweep = {"n_r", {1, 2}};
    CHECK(at_sweep_point(cfg, 2).n_r == 2);
    CHECK_THROWS_AS(at_sweep_point(cfg, 2.5), ConfigError);
    CHECK_THROWS_AS(at_sweep_point(cfg, 0), ConfigError);

    cfg.sweep = {"p_s", {50}};
    CHECK(at_sweep_point(cfg, 50).p_s == 50.0);
    CHECK(sweep_column(cfg) == "p_s_w");
}

TEST_CASE("number formatting and lists")
{
    CHECK(format_number(7.29756853360525, 6) == "7.29757");
    CHECK(format_number(0.0, 6) == "0");
    CHECK(format_number(1.0e-7, 6) == "1e-07");
    CHECK(parse_number_list("50, 100,150") == std::vector<double>{50, 100, 150});
    CHECK_THROWS_AS(parse_number_list(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_number_list("1,x"), std::invalid_argument);
}
