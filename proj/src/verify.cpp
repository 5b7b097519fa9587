#include "rbc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "rbc/coverage.hpp"
#include "rbc/random.hpp"
#include "rbc/scheduling.hpp"
#include "rbc/simulation.hpp"

namespace rbc::verify
{
namespace
{

constexpr double table_rel_tol = 5e-3;
constexpr double oracle_rel_tol = 1e-9;
constexpr double curve_step = 0.01;
constexpr double fov_deg = 100.0;

std::string num(double v, int precision = 6)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

double rel_err(double actual, double expected)
{
    return std::abs(actual - expected) / std::abs(expected);
}

Check rel_check(std::string label, double expected, double actual, double tol)
{
    return {std::move(label), num(expected), num(actual, 8), "rel " + num(tol),
            rel_err(actual, expected) <= tol};
}

template <typename Body>
CriterionReport timed(std::string name, double budget, Body body)
{
    CriterionReport rep;
    rep.name = std::move(name);
    rep.budget_seconds = budget;
    const auto start = std::chrono::steady_clock::now();
    try
    {
        body(rep);
    }
    catch (const std::exception& e)
    {
        rep.error = e.what();
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

SimConfig base_config(const Options& opt)
{
    SimConfig cfg;
    cfg.channel = opt.channel;
    cfg.seed = opt.seed;
    cfg.n_runs = opt.n_runs;
    cfg.p_s = 200.0;
    cfg.t_o = 3600.0;
    cfg.n_r = 10;
    return cfg;
}

// Point estimates along a sweep must move in one direction (ties allowed).
void monotone_checks(CriterionReport& rep, const std::string& what,
                     const std::vector<double>& xs, const std::vector<double>& ys,
                     bool increasing)
{
    for (std::size_t i = 1; i < xs.size(); ++i)
    {
        const bool ok = increasing ? ys[i] >= ys[i - 1] : ys[i] <= ys[i - 1];
        rep.checks.push_back({what + " " + num(xs[i - 1]) + " -> " + num(xs[i]),
                              std::string(increasing ? ">= " : "<= ") + num(ys[i - 1], 8),
                              num(ys[i], 8), "none", ok});
    }
}

} // namespace

bool CriterionReport::passed() const
{
    if (!error.empty() || checks.empty() || !within_budget())
        return false;
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const std::vector<TableRow>& reference_table()
{
    static const std::vector<TableRow> rows = {
        {50.0, 3.2623, 2.0970, 2.4991},
        {100.0, 7.2972, 4.6906, 5.5900},
        {150.0, 11.2438, 7.2274, 8.6133},
        {200.0, 16.7149, 10.7441, 12.8044},
    };
    return rows;
}

CriterionReport check_distance_table(const Options& opt)
{
    return timed("largest transmission distance table", 1.0, [&](CriterionReport& rep) {
        for (const auto& row : reference_table())
        {
            const TransmissionRange range = max_transmission_distance(opt.channel, row.p_s);
            if (!range.finite())
            {
                rep.checks.push_back({"D at " + num(row.p_s) + " W", num(row.d_max),
                                      to_string(range.kind), "rel " + num(table_rel_tol), false});
                continue;
            }
            rep.checks.push_back(
                rel_check("D at " + num(row.p_s) + " W", row.d_max, range.meters, table_rel_tol));
        }
    });
}

CriterionReport check_coverage_table(const Options& opt)
{
    return timed("transmitter coverage table", 1.0, [&](CriterionReport& rep) {
        for (const auto& row : reference_table())
        {
            const TransmissionRange range = max_transmission_distance(opt.channel, row.p_s);
            if (!range.finite())
            {
                rep.checks.push_back({"cone at " + num(row.p_s) + " W", "finite",
                                      to_string(range.kind), "", false});
                continue;
            }
            const CoverageCone cone = cone_from_distance(range.meters, fov_deg);
            rep.checks.push_back(rel_check("h at " + num(row.p_s) + " W", row.h, cone.h, table_rel_tol));
            rep.checks.push_back(rel_check("r at " + num(row.p_s) + " W", row.r, cone.r, table_rel_tol));
        }
    });
}

CriterionReport check_oracle_equivalence(const Options& opt)
{
    return timed("closed-form range vs bisection", 5.0, [&](CriterionReport& rep) {
        RandomStream rng(opt.seed);
        constexpr int wanted = 1000;
        int compared = 0;
        int attempts = 0;
        int worst_mismatch = 0;
        double worst = 0.0;
        double worst_p = 0.0;
        while (compared < wanted && attempts < 100 * wanted)
        {
            ++attempts;
            const double p_s = 1.0 + rng.uniform() * 999.0;
            const TransmissionRange closed = max_transmission_distance(opt.channel, p_s);
            const TransmissionRange bisect = max_transmission_distance_bisection(opt.channel, p_s);
            if (closed.kind != bisect.kind)
            {
                ++worst_mismatch;
                continue;
            }
            if (!closed.finite())
                continue;
            ++compared;
            const double err = rel_err(closed.meters, bisect.meters);
            if (err > worst)
            {
                worst = err;
                worst_p = p_s;
            }
        }
        rep.checks.push_back({"finite-regime powers compared", std::to_string(wanted),
                              std::to_string(compared), "exact", compared == wanted});
        rep.checks.push_back({"regime disagreements", "0", std::to_string(worst_mismatch), "exact",
                              worst_mismatch == 0});
        rep.checks.push_back({"max rel error (at " + num(worst_p) + " W)", "0", num(worst, 3),
                              "rel " + num(oracle_rel_tol), worst <= oracle_rel_tol});
    });
}

CriterionReport check_power_curve_shape(const Options& opt)
{
    return timed("output power curve shape", 5.0, [&](CriterionReport& rep) {
        const std::vector<double> powers = {50.0, 100.0, 150.0, 200.0};
        std::vector<double> ranges;
        for (double p_s : powers)
        {
            const TransmissionRange range = max_transmission_distance(opt.channel, p_s);
            if (!range.finite())
            {
                rep.checks.push_back({"range at " + num(p_s) + " W", "finite",
                                      to_string(range.kind), "", false});
                return;
            }
            ranges.push_back(range.meters);
        }

        for (std::size_t i = 0; i < powers.size(); ++i)
        {
            const double d_end = ranges[i] + 1.0;
            const auto steps = static_cast<long>(std::floor(d_end / curve_step));
            long increases = 0;
            long nonzero_past_range = 0;
            double prev = output_electric_power(opt.channel, powers[i], 0.0);
            for (long k = 1; k <= steps; ++k)
            {
                const double d = k * curve_step;
                const double p = output_electric_power(opt.channel, powers[i], d);
                if (p > prev)
                    ++increases;
                if (d >= ranges[i] && p != 0.0)
                    ++nonzero_past_range;
                prev = p;
            }
            rep.checks.push_back({"increasing steps at " + num(powers[i]) + " W", "0",
                                  std::to_string(increases), "exact", increases == 0});
            rep.checks.push_back({"nonzero samples past D at " + num(powers[i]) + " W", "0",
                                  std::to_string(nonzero_past_range), "exact",
                                  nonzero_past_range == 0});
        }

        for (std::size_t i = 0; i + 1 < powers.size(); ++i)
        {
            const double limit = std::min(ranges[i], ranges[i + 1]);
            long violations = 0;
            for (long k = 0; k * curve_step < limit; ++k)
            {
                const double d = k * curve_step;
                if (!(output_electric_power(opt.channel, powers[i + 1], d) >
                      output_electric_power(opt.channel, powers[i], d)))
                    ++violations;
            }
            rep.checks.push_back({"P_e(" + num(powers[i + 1]) + " W) > P_e(" + num(powers[i]) +
                                      " W) below D",
                                  "0 violations", std::to_string(violations), "exact",
                                  violations == 0});
        }
    });
}

CriterionReport check_trend_receivers(const Options& opt)
{
    return timed("E_sa falls with receiver count", 60.0, [&](CriterionReport& rep) {
        const std::vector<double> counts = {1, 5, 10, 20, 50};
        for (SchedulerKind kind : {SchedulerKind::cdc, SchedulerKind::rrc})
        {
            std::vector<double> e_sa;
            for (double n : counts)
            {
                SimConfig cfg = base_config(opt);
                cfg.scheduler = kind;
                cfg.n_r = static_cast<std::uint32_t>(n);
                e_sa.push_back(monte_carlo(cfg, opt.threads).e_sa);
            }
            monotone_checks(rep, std::string(to_string(kind)) + " E_sa, N_r", counts, e_sa, false);
        }
    });
}

CriterionReport check_trend_duration(const Options& opt)
{
    return timed("E_sa grows with charging duration", 60.0, [&](CriterionReport& rep) {
        const std::vector<double> horizons = {3600.0, 7200.0, 10800.0};
        for (SchedulerKind kind : {SchedulerKind::cdc, SchedulerKind::rrc})
        {
            std::vector<double> e_sa;
            for (double t_o : horizons)
            {
                SimConfig cfg = base_config(opt);
                cfg.scheduler = kind;
                cfg.t_o = t_o;
                e_sa.push_back(monte_carlo(cfg, opt.threads).e_sa);
            }
            monotone_checks(rep, std::string(to_string(kind)) + " E_sa, T_o", horizons, e_sa, true);
        }
    });
}

CriterionReport check_trend_power(const Options& opt)
{
    return timed("E_sa grows with input power", 60.0, [&](CriterionReport& rep) {
        const std::vector<double> powers = {50.0, 100.0, 150.0, 200.0};
        for (SchedulerKind kind : {SchedulerKind::cdc, SchedulerKind::rrc})
        {
            std::vector<double> e_sa;
            for (double p_s : powers)
            {
                SimConfig cfg = base_config(opt);
                cfg.scheduler = kind;
                cfg.t_o = 10800.0;
                cfg.p_s = p_s;
                cfg.init_cone_power = 200.0;
                e_sa.push_back(monte_carlo(cfg, opt.threads).e_sa);
            }
            monotone_checks(rep, std::string(to_string(kind)) + " E_sa, P_s", powers, e_sa, true);
        }
    });
}

CriterionReport check_cdc_advantage(const Options& opt)
{
    return timed("CDC minus RRC gap", 60.0, [&](CriterionReport& rep) {
        for (std::uint32_t n_r : {1u, 5u, 10u})
        {
            SimConfig cfg = base_config(opt);
            cfg.t_o = 10800.0;
            cfg.n_r = n_r;
            const double d_sa = compare(cfg, opt.threads).d_sa;
            if (n_r == 1)
                rep.checks.push_back({"D_sa at N_r=1", "0", num(d_sa, 8), "exact", d_sa == 0.0});
            else
                rep.checks.push_back({"D_sa at N_r=" + std::to_string(n_r), "> 0", num(d_sa, 8),
                                      "none", d_sa > 0.0});
        }
    });
}

CriterionReport check_invariants(const Options& opt)
{
    return timed("model invariants", 30.0, [&](CriterionReport& rep) {
        // Energy bookkeeping over logged episodes.
        {
            long decreases = 0;
            long over_capacity = 0;
            long multi_gain_slots = 0;
            long slots = 0;
            for (SchedulerKind kind : {SchedulerKind::cdc, SchedulerKind::rrc})
            {
                for (EligibilityMode mode : {EligibilityMode::strict, EligibilityMode::work_conserving})
                {
                    for (std::uint64_t s = 0; s < 8; ++s)
                    {
                        SimConfig cfg = base_config(opt);
                        cfg.scheduler = kind;
                        cfg.scheduling.eligibility = mode;
                        cfg.n_r = 6;
                        cfg.t_o = 7200.0;
                        cfg.v_max = 0.05;
                        const SlotContext ctx = SlotContext::make(cfg);
                        RandomStream rng = RandomStream::for_run(opt.seed + 17, s);
                        EpisodeState state = EpisodeState::from_receivers(init_episode(cfg, rng));
                        const std::size_t n = slot_count(cfg.t_o, cfg.t_c);
                        for (std::size_t k = 0; k < n; ++k)
                        {
                            std::vector<double> before;
                            for (const auto& r : state.receivers)
                                before.push_back(r.remaining_energy);
                            run_slot(state, ctx, rng);
                            int gained = 0;
                            for (std::size_t i = 0; i < before.size(); ++i)
                            {
                                const auto& r = state.receivers[i];
                                if (r.remaining_energy < before[i])
                                    ++decreases;
                                if (r.remaining_energy > r.battery_capacity)
                                    ++over_capacity;
                                if (r.remaining_energy > before[i])
                                    ++gained;
                            }
                            if (gained > 1)
                                ++multi_gain_slots;
                            ++slots;
                        }
                    }
                }
            }
            rep.checks.push_back({"energy decreases over " + std::to_string(slots) + " slots", "0",
                                  std::to_string(decreases), "exact", decreases == 0});
            rep.checks.push_back({"energies above capacity", "0", std::to_string(over_capacity),
                                  "exact", over_capacity == 0});
            rep.checks.push_back({"slots charging more than one receiver", "0",
                                  std::to_string(multi_gain_slots), "exact", multi_gain_slots == 0});
        }

        // Scaling both weights never moves the CDC choice.
        {
            RandomStream rng(opt.seed ^ 0x5ca1eULL);
            long changed = 0;
            constexpr int trials = 2000;
            for (int t = 0; t < trials; ++t)
            {
                const auto n = 1 + static_cast<std::uint32_t>(rng.uniform() * 12);
                std::vector<ReceiverState> states;
                for (std::uint32_t i = 0; i < n; ++i)
                {
                    ReceiverState s;
                    s.id = ReceiverId{i};
                    s.battery_capacity = 10.35;
                    s.remaining_energy = rng.uniform() * 10.35;
                    s.position = {rng.uniform() * 6, rng.uniform() * 6, rng.uniform() * 6};
                    states.push_back(s);
                }
                SchedulerConfig base;
                base.c_e = 0.05 + rng.uniform();
                base.c_d = 0.05 + rng.uniform();
                base.eligibility = rng.uniform() < 0.5 ? EligibilityMode::strict
                                                       : EligibilityMode::work_conserving;
                SchedulerConfig scaled = base;
                const double k = std::exp((rng.uniform() - 0.5) * 10.0);
                scaled.c_e *= k;
                scaled.c_d *= k;
                if (cdc_select(states, 7.2972, base) != cdc_select(states, 7.2972, scaled))
                    ++changed;
            }
            rep.checks.push_back({"CDC choice changed by weight scaling (" + std::to_string(trials) +
                                      " instances)",
                                  "0", std::to_string(changed), "exact", changed == 0});
        }

        // Round-robin: every window of N_r slots touches each receiver once.
        {
            long unfair = 0;
            for (std::uint32_t n = 1; n <= 12; ++n)
            {
                std::vector<ReceiverState> states(n);
                for (std::uint32_t i = 0; i < n; ++i)
                {
                    states[i].id = ReceiverId{i};
                    states[i].arrival_order = (i * 7) % n;
                }
                RoundRobinQueue q = RoundRobinQueue::from_arrivals(states);
                std::vector<ReceiverId> picks;
                for (std::uint32_t slot = 0; slot < 5 * n; ++slot)
                {
                    picks.push_back(rrc_select(q, states));
                    q.rotate();
                }
                for (std::size_t start = 0; start + n <= picks.size(); ++start)
                {
                    std::vector<int> hits(n, 0);
                    for (std::size_t j = start; j < start + n; ++j)
                        ++hits[to_index(picks[j])];
                    if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; }))
                        ++unfair;
                }
            }
            rep.checks.push_back({"round-robin windows with a repeat or a miss", "0",
                                  std::to_string(unfair), "exact", unfair == 0});
        }

        // Bit-identical Monte Carlo output for any worker count.
        {
            SimConfig cfg = base_config(opt);
            cfg.n_r = 5;
            cfg.n_runs = 40;
            const MonteCarloResult ref = monte_carlo(cfg, 1);
            const ComparisonResult ref_cmp = compare(cfg, 1);
            long differing = 0;
            for (unsigned threads : {2u, 3u, 8u})
            {
                const MonteCarloResult mc = monte_carlo(cfg, threads);
                const ComparisonResult cmp = compare(cfg, threads);
                if (mc.per_run != ref.per_run || mc.e_sa != ref.e_sa)
                    ++differing;
                if (cmp.d_sa != ref_cmp.d_sa || cmp.cdc.per_run != ref_cmp.cdc.per_run ||
                    cmp.rrc.per_run != ref_cmp.rrc.per_run)
                    ++differing;
            }
            rep.checks.push_back({"results differing across 1/2/3/8 workers", "0",
                                  std::to_string(differing), "bit-exact", differing == 0});
        }
    });
}

CriterionReport check_strict_idle_slot(const Options& opt)
{
    return timed("strict eligibility idles the slot", 1.0, [&](CriterionReport& rep) {
        SimConfig cfg;
        cfg.channel = opt.channel;
        cfg.p_s = 100.0;
        cfg.n_r = 2;
        cfg.v_max = 0.0;
        const double d_max = max_transmission_distance(cfg.channel, cfg.p_s).value();

        // Receiver 0 has the smaller coefficient but sits beyond the range.
        std::vector<ReceiverState> receivers(2);
        receivers[0].id = ReceiverId{0};
        receivers[0].arrival_order = 0;
        receivers[0].battery_capacity = cfg.e_b;
        receivers[0].remaining_energy = 0.0;
        receivers[0].position = {0.0, 0.0, d_max + 1.0};
        receivers[1].id = ReceiverId{1};
        receivers[1].arrival_order = 1;
        receivers[1].battery_capacity = cfg.e_b;
        receivers[1].remaining_energy = 9.0;
        receivers[1].position = {0.0, 0.0, 1.0};

        for (EligibilityMode mode : {EligibilityMode::strict, EligibilityMode::work_conserving})
        {
            cfg.scheduling.eligibility = mode;
            const SlotContext ctx = SlotContext::make(cfg);
            EpisodeState state = EpisodeState::from_receivers(receivers);
            RandomStream rng(opt.seed);
            const SlotRecord rec = run_slot(state, ctx, rng);
            const bool strict = mode == EligibilityMode::strict;
            const std::string tag = strict ? "strict" : "work-conserving";
            const std::string actual =
                rec.selected ? "receiver " + std::to_string(to_index(*rec.selected)) : "idle";
            const bool right_pick = strict ? !rec.selected
                                           : (rec.selected && *rec.selected == ReceiverId{1});
            rep.checks.push_back({tag + " selection", strict ? "idle" : "receiver 1", actual,
                                  "exact", right_pick});
            const double gain = state.receivers[1].remaining_energy - receivers[1].remaining_energy;
            const bool right_gain = strict ? gain == 0.0 : gain > 0.0;
            rep.checks.push_back({tag + " energy gained by receiver 1", strict ? "0" : "> 0",
                                  num(gain, 8), "exact", right_gain});
        }
    });
}

std::vector<CriterionReport> run_all(const Options& opt)
{
    return {
        check_distance_table(opt),   check_coverage_table(opt), check_oracle_equivalence(opt),
        check_power_curve_shape(opt), check_trend_receivers(opt), check_trend_duration(opt),
        check_trend_power(opt),       check_cdc_advantage(opt),  check_invariants(opt),
        check_strict_idle_slot(opt),
    };
}

void print_report(std::ostream& os, const std::vector<CriterionReport>& reports, bool show_timing)
{
    for (const auto& rep : reports)
    {
        os << (rep.passed() ? "[PASS] " : "[FAIL] ") << rep.name;
        if (show_timing)
            os << "  (" << std::fixed << std::setprecision(3) << rep.seconds << " s, budget "
               << std::setprecision(0) << rep.budget_seconds << " s)" << std::defaultfloat;
        os << '\n';
        for (const auto& c : rep.checks)
        {
            os << "    " << (c.passed ? "ok   " : "FAIL ") << std::left << std::setw(56) << c.label
               << " expected " << std::setw(14) << c.expected << " actual " << std::setw(14)
               << c.actual << " tol " << c.tolerance << std::right << '\n';
        }
        if (!rep.error.empty())
            os << "    error: " << rep.error << '\n';
        if (show_timing && !rep.within_budget())
            os << "    runtime budget exceeded\n";
    }
}

bool all_passed(const std::vector<CriterionReport>& reports)
{
    return std::all_of(reports.begin(), reports.end(),
                       [](const CriterionReport& r) { return r.passed(); });
}

} // namespace rbc::verify
