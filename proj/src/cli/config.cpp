#include "rbc/cli/config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <istream>
#include <sstream>

#include "rbc/cli/csv.hpp"

namespace rbc::cli
{
namespace
{

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::string exact(double v)
{
    return format_number(v, 17);
}

double to_double(std::string_view key, std::string_view text)
{
    const std::string s = trim(text);
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v))
        throw ConfigError(std::string(key), "expected a number, got '" + s + "'");
    return v;
}

std::uint64_t to_u64(std::string_view key, std::string_view text, std::uint64_t max)
{
    const std::string s = trim(text);
    char* end = nullptr;
    errno = 0;
    const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
    if (s.empty() || s[0] == '-' || s[0] == '+' || end != s.c_str() + s.size() ||
        errno == ERANGE || v > max)
        throw ConfigError(std::string(key), "expected a non-negative integer, got '" + s + "'");
    return v;
}

std::uint32_t to_u32(std::string_view key, std::string_view text)
{
    return static_cast<std::uint32_t>(to_u64(key, text, 0xFFFFFFFFULL));
}

bool to_bool(std::string_view key, std::string_view text)
{
    const std::string s = trim(text);
    if (s == "true" || s == "1")
        return true;
    if (s == "false" || s == "0")
        return false;
    throw ConfigError(std::string(key), "expected true or false, got '" + s + "'");
}

struct Setting
{
    std::string key;
    std::function<void(RunConfig&, std::string_view)> set;
    std::function<std::string(const RunConfig&)> get;
};

#define RBC_DOUBLE_SETTING(name, member)                                                   \
    Setting                                                                                \
    {                                                                                      \
        name, [](RunConfig& c, std::string_view v) { c.member = to_double(name, v); },     \
            [](const RunConfig& c) { return exact(c.member); }                             \
    }

const std::vector<Setting>& settings()
{
    static const std::vector<Setting> table = {
        RBC_DOUBLE_SETTING("channel.beta", sim.channel.beta),
        RBC_DOUBLE_SETTING("channel.gamma", sim.channel.gamma),
        RBC_DOUBLE_SETTING("channel.big_c", sim.channel.big_c),
        RBC_DOUBLE_SETTING("channel.f", sim.channel.f),
        RBC_DOUBLE_SETTING("channel.m", sim.channel.m),
        RBC_DOUBLE_SETTING("channel.a", sim.channel.a),
        RBC_DOUBLE_SETTING("channel.lambda", sim.channel.lambda),
        RBC_DOUBLE_SETTING("channel.eta_g", sim.channel.eta_g),
        RBC_DOUBLE_SETTING("channel.l", sim.channel.l),
        RBC_DOUBLE_SETTING("sim.p_s", sim.p_s),
        {"sim.n_r", [](RunConfig& c, std::string_view v) { c.sim.n_r = to_u32("sim.n_r", v); },
         [](const RunConfig& c) { return std::to_string(c.sim.n_r); }},
        RBC_DOUBLE_SETTING("sim.t_c", sim.t_c),
        RBC_DOUBLE_SETTING("sim.t_o", sim.t_o),
        RBC_DOUBLE_SETTING("sim.e_b", sim.e_b),
        RBC_DOUBLE_SETTING("sim.v_max", sim.v_max),
        RBC_DOUBLE_SETTING("sim.fov", sim.fov),
        {"sim.init_cone_power",
         [](RunConfig& c, std::string_view v) {
             if (trim(v) == "none")
                 c.sim.init_cone_power.reset();
             else
                 c.sim.init_cone_power = to_double("sim.init_cone_power", v);
         },
         [](const RunConfig& c) {
             return c.sim.init_cone_power ? exact(*c.sim.init_cone_power) : std::string("none");
         }},
        {"sim.seed",
         [](RunConfig& c, std::string_view v) { c.sim.seed = to_u64("sim.seed", v, ~0ULL); },
         [](const RunConfig& c) { return std::to_string(c.sim.seed); }},
        {"sim.n_runs",
         [](RunConfig& c, std::string_view v) { c.sim.n_runs = to_u32("sim.n_runs", v); },
         [](const RunConfig& c) { return std::to_string(c.sim.n_runs); }},
        {"sim.position_mode",
         [](RunConfig& c, std::string_view v) {
             const std::string s = trim(v);
             if (s == "faithful")
                 c.sim.position_mode = PositionMode::faithful;
             else if (s == "geometric")
                 c.sim.position_mode = PositionMode::geometric;
             else
                 throw ConfigError("sim.position_mode", "expected faithful or geometric, got '" + s + "'");
         },
         [](const RunConfig& c) {
             return std::string(c.sim.position_mode == PositionMode::faithful ? "faithful"
                                                                              : "geometric");
         }},
        {"sim.scheduler",
         [](RunConfig& c, std::string_view v) {
             const std::string s = trim(v);
             if (s == "cdc")
                 c.sim.scheduler = SchedulerKind::cdc;
             else if (s == "rrc")
                 c.sim.scheduler = SchedulerKind::rrc;
             else
                 throw ConfigError("sim.scheduler", "expected cdc or rrc, got '" + s + "'");
         },
         [](const RunConfig& c) { return std::string(to_string(c.sim.scheduler)); }},
        RBC_DOUBLE_SETTING("sched.c_e", sim.scheduling.c_e),
        RBC_DOUBLE_SETTING("sched.c_d", sim.scheduling.c_d),
        {"sched.eligibility",
         [](RunConfig& c, std::string_view v) {
             const std::string s = trim(v);
             if (s == "strict")
                 c.sim.scheduling.eligibility = EligibilityMode::strict;
             else if (s == "work_conserving" || s == "work-conserving")
                 c.sim.scheduling.eligibility = EligibilityMode::work_conserving;
             else
                 throw ConfigError("sched.eligibility",
                                   "expected strict or work-conserving, got '" + s + "'");
         },
         [](const RunConfig& c) {
             return std::string(c.sim.scheduling.eligibility == EligibilityMode::strict
                                    ? "strict"
                                    : "work-conserving");
         }},
        {"sched.normalized",
         [](RunConfig& c, std::string_view v) {
             c.sim.scheduling.normalized = to_bool("sched.normalized", v);
         },
         [](const RunConfig& c) { return std::string(c.sim.scheduling.normalized ? "true" : "false"); }},
        {"sweep.variable",
         [](RunConfig& c, std::string_view v) {
             const std::string s = trim(v);
             if (s != "n_r" && s != "t_o" && s != "p_s" && s != "none" && !s.empty())
                 throw ConfigError("sweep.variable", "expected n_r, t_o, p_s or none, got '" + s + "'");
             c.sweep.variable = s == "none" ? std::string() : s;
         },
         [](const RunConfig& c) {
             return c.sweep.variable.empty() ? std::string("none") : c.sweep.variable;
         }},
        {"sweep.values",
         [](RunConfig& c, std::string_view v) {
             const std::string s = trim(v);
             if (s.empty() || s == "none")
             {
                 c.sweep.values.clear();
                 return;
             }
             try
             {
                 c.sweep.values = parse_number_list(s);
             }
             catch (const std::invalid_argument& e)
             {
                 throw ConfigError("sweep.values", e.what());
             }
         },
         [](const RunConfig& c) {
             if (c.sweep.values.empty())
                 return std::string("none");
             std::string out;
             for (std::size_t i = 0; i < c.sweep.values.size(); ++i)
                 out += (i ? ", " : "") + exact(c.sweep.values[i]);
             return out;
         }},
        {"curve.p_s",
         [](RunConfig& c, std::string_view v) {
             try
             {
                 c.curve.powers = parse_number_list(trim(v));
             }
             catch (const std::invalid_argument& e)
             {
                 throw ConfigError("curve.p_s", e.what());
             }
         },
         [](const RunConfig& c) {
             std::string out;
             for (std::size_t i = 0; i < c.curve.powers.size(); ++i)
                 out += (i ? ", " : "") + exact(c.curve.powers[i]);
             return out;
         }},
        RBC_DOUBLE_SETTING("curve.d_min", curve.d_min),
        RBC_DOUBLE_SETTING("curve.d_max", curve.d_max),
        RBC_DOUBLE_SETTING("curve.d_step", curve.step),
        {"output.precision",
         [](RunConfig& c, std::string_view v) {
             const auto p = to_u32("output.precision", v);
             if (p < 1 || p > 17)
                 throw ConfigError("output.precision", "must lie in [1, 17]");
             c.precision = static_cast<int>(p);
         },
         [](const RunConfig& c) { return std::to_string(c.precision); }},
    };
    return table;
}

#undef RBC_DOUBLE_SETTING

} // namespace

ConfigError::ConfigError(std::string key, const std::string& message)
    : std::runtime_error(key + ": " + message), key_(std::move(key))
{
}

const std::vector<std::string>& known_keys()
{
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> k;
        for (const auto& s : settings())
            k.push_back(s.key);
        return k;
    }();
    return keys;
}

void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value)
{
    const std::string k = trim(key);
    for (const auto& s : settings())
    {
        if (s.key == k)
        {
            s.set(cfg, value);
            return;
        }
    }
    throw ConfigError(k, "unknown configuration key");
}

void apply_assignment(RunConfig& cfg, std::string_view assignment)
{
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos)
        throw ConfigError(trim(assignment), "expected key=value");
    apply_setting(cfg, assignment.substr(0, eq), assignment.substr(eq + 1));
}

RunConfig parse_config(std::istream& in, RunConfig base, const std::string& source)
{
    std::string line;
    int line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        const auto hash = line.find('#');
        const std::string body = trim(std::string_view(line).substr(0, hash));
        if (body.empty())
            continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw ConfigError(body, source + ":" + std::to_string(line_no) + ": expected key = value");
        apply_setting(base, std::string_view(body).substr(0, eq), std::string_view(body).substr(eq + 1));
    }
    return base;
}

RunConfig load_config_file(const std::string& path, RunConfig base)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file " + path);
    return parse_config(in, std::move(base), path);
}

std::string serialize(const RunConfig& cfg)
{
    std::ostringstream os;
    for (const auto& s : settings())
        os << s.key << " = " << s.get(cfg) << '\n';
    return os.str();
}

std::vector<double> sweep_points(const RunConfig& cfg)
{
    if (!cfg.sweep.variable.empty() && !cfg.sweep.values.empty())
        return cfg.sweep.values;
    if (cfg.sweep.variable == "t_o")
        return {cfg.sim.t_o};
    if (cfg.sweep.variable == "p_s")
        return {cfg.sim.p_s};
    return {static_cast<double>(cfg.sim.n_r)};
}

SimConfig at_sweep_point(const RunConfig& cfg, double value)
{
    SimConfig sim = cfg.sim;
    if (cfg.sweep.variable == "t_o")
        sim.t_o = value;
    else if (cfg.sweep.variable == "p_s")
        sim.p_s = value;
    else
    {
        if (!(value >= 1.0) || value != std::floor(value) || value > 4294967295.0)
            throw ConfigError("sweep.values", "receiver counts must be positive integers");
        sim.n_r = static_cast<std::uint32_t>(value);
    }
    return sim;
}

std::string sweep_column(const RunConfig& cfg)
{
    if (cfg.sweep.variable == "t_o")
        return "t_o_s";
    if (cfg.sweep.variable == "p_s")
        return "p_s_w";
    return "n_r";
}

} // namespace rbc::cli
