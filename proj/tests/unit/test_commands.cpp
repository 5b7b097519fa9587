#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "rbc/channel.hpp"
#include "rbc/cli/commands.hpp"
#include "rbc/cli/csv.hpp"

using namespace rbc;
using namespace rbc::cli;

namespace
{

std::vector<std::vector<std::string>> parse_csv(const std::string& text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
    {
        std::vector<std::string> cells;
        std::size_t start = 0;
        for (;;)
        {
            const auto comma = line.find(',', start);
            cells.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
        rows.push_back(cells);
    }
    return rows;
}

struct Run
{
    int code;
    std::string out;
    std::string err;
};

template <typename F>
Run capture(F f)
{
    std::ostringstream out, err;
    const int code = f(out, err);
    return {code, out.str(), err.str()};
}

RunConfig small_sim()
{
    RunConfig cfg;
    cfg.sim.n_runs = 8;
    cfg.sim.t_o = 600;
    cfg.sim.seed = 5;
    return cfg;
}

} // namespace

TEST_CASE("channel curve")
{
    RunConfig cfg;
    cfg.curve = {{100.0}, 0.0, 8.0, 0.1};
    const auto r = capture([&](auto& o, auto& e) { return cmd_channel(cfg, o, e); });
    REQUIRE(r.code == exit_ok);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 82);
    CHECK(rows[0] == std::vector<std::string>{"p_s_w", "d_m", "p_e_w"});

    double last_positive = -1.0;
    double prev = INFINITY;
    for (std::size_t i = 1; i < rows.size(); ++i)
    {
        const double d = std::stod(rows[i][1]);
        const double p = std::stod(rows[i][2]);
        CHECK(d == doctest::Approx((i - 1) * 0.1).epsilon(1e-9));
        CHECK(p >= 0.0);
        CHECK(p <= prev);
        prev = p;
        if (p > 0.0)
            last_positive = d;
    }
    CHECK(last_positive == doctest::Approx(7.2).epsilon(1e-9));
}

TEST_CASE("channel curve at zero input power is all zeros")
{
    RunConfig cfg;
    cfg.curve = {{0.0}, 0.0, 5.0, 0.5};
    const auto r = capture([&](auto& o, auto& e) { return cmd_channel(cfg, o, e); });
    REQUIRE(r.code == exit_ok);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 12);
    for (std::size_t i = 1; i < rows.size(); ++i)
        CHECK(rows[i][2] == "0");
}

TEST_CASE("channel output at full precision is the library value")
{
    RunConfig cfg;
    cfg.curve = {{200.0}, 5.0, 5.0, 0.1};
    cfg.precision = 17;
    const auto r = capture([&](auto& o, auto& e) { return cmd_channel(cfg, o, e); });
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1][2] == format_number(output_electric_power(ChannelParams{}, 200.0, 5.0), 17));
}

TEST_CASE("channel rejects a bad distance range")
{
    RunConfig cfg;
    cfg.curve = {{100.0}, 5.0, 1.0, 0.1};
    auto r = capture([&](auto& o, auto& e) { return cmd_channel(cfg, o, e); });
    CHECK(r.code == exit_usage);
    CHECK_FALSE(r.err.empty());
    cfg.curve = {{100.0}, 0.0, 1.0, 0.0};
    r = capture([&](auto& o, auto& e) { return cmd_channel(cfg, o, e); });
    CHECK(r.code == exit_usage);
}

TEST_CASE("coverage table")
{
    RunConfig cfg;
    cfg.curve.powers = {50.0, 100.0, 150.0, 200.0, 40.0, 400.0};
    const auto r = capture([&](auto& o, auto& e) { return cmd_coverage(cfg, o, e); });
    REQUIRE(r.code == exit_ok);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 7);
    CHECK(rows[0] == std::vector<std::string>{"p_s_w", "d_max_m", "h_m", "r_m"});

    const double expected[][3] = {
        {3.2627, 2.0972, 2.4994}, {7.2972, 4.6906, 5.5899},
        {11.2444, 7.2277, 8.6136}, {16.7163, 10.7449, 12.8052}};
    for (int i = 0; i < 4; ++i)
        for (int c = 0; c < 3; ++c)
            CHECK(std::stod(rows[i + 1][c + 1]) == doctest::Approx(expected[i][c]).epsilon(5e-3));

    CHECK(rows[5] == std::vector<std::string>{"40", "no_coverage", "", ""});
    CHECK(rows[6] == std::vector<std::string>{"400", "unbounded", "", ""});
}

TEST_CASE("coverage at a right-angle field of view")
{
    RunConfig cfg;
    cfg.curve.powers = {100.0};
    cfg.sim.fov = 90.0;
    cfg.precision = 17;
    const auto r = capture([&](auto& o, auto& e) { return cmd_coverage(cfg, o, e); });
    const auto rows = parse_csv(r.out);
    const double d = std::stod(rows[1][1]);
    CHECK(std::stod(rows[1][2]) == doctest::Approx(d / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(std::stod(rows[1][3]) == doctest::Approx(d / std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("simulate is deterministic and sweeps")
{
    RunConfig cfg = small_sim();
    cfg.sweep = {"n_r", {1, 5, 20}};
    const auto a = capture([&](auto& o, auto& e) { return cmd_simulate(cfg, 1, o, e); });
    const auto b = capture([&](auto& o, auto& e) { return cmd_simulate(cfg, 4, o, e); });
    REQUIRE(a.code == exit_ok);
    CHECK(a.out == b.out);

    const auto rows = parse_csv(a.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == std::vector<std::string>{"n_r", "scheduler", "e_sa_wh", "sd_wh", "n_runs"});
    for (std::size_t i = 1; i < rows.size(); ++i)
    {
        CHECK(rows[i][1] == "cdc");
        CHECK(rows[i][4] == "8");
    }
    cfg.sim.seed = 6;
    const auto c = capture([&](auto& o, auto& e) { return cmd_simulate(cfg, 1, o, e); });
    CHECK(c.out != a.out);
}

TEST_CASE("simulate trend over receiver count")
{
    // More receivers share the same charging time.
    RunConfig cfg;
    cfg.sim.n_runs = 200;
    cfg.sweep = {"n_r", {1, 5, 20}};
    const auto r = capture([&](auto& o, auto& e) { return cmd_simulate(cfg, 0, o, e); });
    REQUIRE(r.code == exit_ok);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(std::stod(rows[1][2]) > std::stod(rows[2][2]));
    CHECK(std::stod(rows[2][2]) > std::stod(rows[3][2]));
}

TEST_CASE("simulate reports a charging power without a finite range")
{
    RunConfig cfg = small_sim();
    cfg.sim.p_s = 40.0;
    const auto r = capture([&](auto& o, auto& e) { return cmd_simulate(cfg, 1, o, e); });
    CHECK(r.code == exit_usage);
    CHECK(r.err.find("40") != std::string::npos);
}

TEST_CASE("compare")
{
    RunConfig cfg = small_sim();
    cfg.sweep = {"n_r", {1, 5}};
    const auto r = capture([&](auto& o, auto& e) { return cmd_compare(cfg, 2, o, e); });
    REQUIRE(r.code == exit_ok);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == std::vector<std::string>{"n_r", "e_sa_cdc_wh", "e_sa_rrc_wh", "d_sa_wh"});
    CHECK(rows[1][1] == rows[1][2]);
    CHECK(std::stod(rows[1][3]) == 0.0);

    cfg.precision = 17;
    const auto hi = capture([&](auto& o, auto& e) { return cmd_compare(cfg, 2, o, e); });
    const auto hr = parse_csv(hi.out);
    CHECK(std::stod(hr[2][3]) ==
          doctest::Approx(std::stod(hr[2][1]) - std::stod(hr[2][2])).epsilon(1e-12));
}

TEST_CASE("compare at a weak charging power")
{
    RunConfig cfg = small_sim();
    cfg.sim.p_s = 50.0;
    cfg.sim.init_cone_power = 50.0;
    cfg.sim.n_r = 5;
    const auto r = capture([&](auto& o, auto& e) { return cmd_compare(cfg, 1, o, e); });
    REQUIRE(r.code == exit_ok);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 2);
    // 60 slots at well under a watt: neither scheduler can move the average far.
    CHECK(std::abs(std::stod(rows[1][3])) < 0.1);
}

TEST_CASE("manifest")
{
    RunConfig cfg = small_sim();
    cfg.sim.p_s = 123.25;
    const std::string m = make_manifest("simulate", cfg, {"out/esa.csv"});
    CHECK(m.rfind("# ", 0) == 0);
    CHECK(m.find("rbcsim") != std::string::npos);
    CHECK(m.find("simulate") != std::string::npos);
    CHECK(m.find("out/esa.csv") != std::string::npos);
    CHECK(m.find("sim.p_s = 123.25") != std::string::npos);

    std::istringstream in(m);
    CHECK(serialize(parse_config(in)) == serialize(cfg));
}
