#include "rbc/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "rbc/errors.hpp"
#include "rbc/mobility.hpp"

namespace rbc
{
namespace
{

constexpr double seconds_per_hour = 3600.0;

CoverageCone cone_for_power(const SimConfig& cfg, double p_s)
{
    const TransmissionRange range = max_transmission_distance(cfg.channel, p_s);
    return cone_from_distance(range.value(), cfg.fov);
}

// Calls body(run) for every run in [0, n_runs) on up to `threads` workers.
template <typename Body>
void for_each_run(std::uint32_t n_runs, unsigned threads, Body body)
{
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, n_runs);
    if (threads <= 1)
    {
        for (std::uint32_t run = 0; run < n_runs; ++run)
            body(run);
        return;
    }

    std::atomic<std::uint32_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
    {
        workers.emplace_back([&] {
            for (std::uint32_t run = next++; run < n_runs; run = next++)
            {
                try
                {
                    body(run);
                }
                catch (...)
                {
                    std::lock_guard lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                    next = n_runs;
                }
            }
        });
    }
    workers.clear();
    if (failure)
        std::rethrow_exception(failure);
}

MonteCarloResult reduce(std::vector<double> per_run, std::uint32_t n_r)
{
    MonteCarloResult out;
    out.n_r = n_r;
    const double n = static_cast<double>(per_run.size());
    double sum = 0.0;
    for (double e : per_run)
        sum += e;
    out.e_sa = sum / (static_cast<double>(n_r) * n);
    if (per_run.size() > 1)
    {
        double ss = 0.0;
        for (double e : per_run)
        {
            const double dev = e / n_r - out.e_sa;
            ss += dev * dev;
        }
        out.sd = std::sqrt(ss / (n - 1.0));
    }
    out.per_run = std::move(per_run);
    return out;
}

} // namespace

const char* to_string(SchedulerKind kind)
{
    return kind == SchedulerKind::cdc ? "cdc" : "rrc";
}

void SimConfig::validate() const
{
    channel.validate();
    scheduling.validate();
    if (!(p_s >= 0.0))
        throw std::invalid_argument("sim.p_s must be non-negative");
    if (init_cone_power && !(*init_cone_power >= 0.0))
        throw std::invalid_argument("sim.init_cone_power must be non-negative");
    if (n_r < 1)
        throw std::invalid_argument("sim.n_r must be at least 1");
    if (!(t_c > 0.0))
        throw std::invalid_argument("sim.t_c must be positive");
    if (!(t_o >= 0.0) || !std::isfinite(t_o))
        throw std::invalid_argument("sim.t_o must be finite and non-negative");
    if (!(e_b > 0.0))
        throw std::invalid_argument("sim.e_b must be positive");
    if (!(v_max >= 0.0))
        throw std::invalid_argument("sim.v_max must be non-negative");
    if (!(fov > 0.0 && fov < 180.0))
        throw std::invalid_argument("sim.fov must lie in (0, 180)");
    if (n_runs < 1)
        throw std::invalid_argument("sim.n_runs must be at least 1");
}

std::size_t slot_count(double t_o, double t_c)
{
    if (!(t_c > 0.0))
        throw std::invalid_argument("slot length must be positive");
    std::size_t n = 0;
    for (double t_s = 0.0; t_s <= t_o; t_s += t_c)
        ++n;
    return n;
}

SlotContext SlotContext::make(const SimConfig& cfg)
{
    cfg.validate();
    return {cfg, cone_for_power(cfg, cfg.p_s)};
}

bool SlotContext::chargeable(const ReceiverState& s) const
{
    return !s.full() && in_coverage(s.position, charge_cone, cfg.position_mode);
}

EpisodeState EpisodeState::from_receivers(std::vector<ReceiverState> receivers)
{
    EpisodeState state;
    state.queue = RoundRobinQueue::from_arrivals(receivers);
    state.receivers = std::move(receivers);
    return state;
}

std::vector<ReceiverState> init_episode(const SimConfig& cfg, RandomStream& rng)
{
    cfg.validate();
    const CoverageCone cone = cone_for_power(cfg, cfg.initial_cone_power());
    std::vector<ReceiverState> receivers;
    receivers.reserve(cfg.n_r);
    for (std::uint32_t i = 0; i < cfg.n_r; ++i)
    {
        ReceiverState s;
        s.id = ReceiverId{i};
        s.arrival_order = i;
        s.battery_capacity = cfg.e_b;
        s.position = sample_initial_position(rng, cone, cfg.position_mode);
        s.remaining_energy = rng.uniform() * cfg.e_b;
        receivers.push_back(s);
    }
    return receivers;
}

SlotRecord run_slot(EpisodeState& state, const SlotContext& ctx, RandomStream& rng)
{
    const SimConfig& cfg = ctx.cfg;
    auto& receivers = state.receivers;

    SlotRecord rec;
    rec.slot = state.slot;
    rec.distances.reserve(receivers.size());
    for (const auto& s : receivers)
        rec.distances.push_back(s.distance());

    if (cfg.scheduler == SchedulerKind::cdc)
    {
        rec.selected = cdc_select(receivers, ctx.charge_cone.d_max, cfg.scheduling,
                                  [&ctx](const ReceiverState& s) { return ctx.chargeable(s); });
    }
    else
    {
        rec.selected = rrc_select(state.queue, receivers);
    }

    if (rec.selected)
    {
        auto it = std::find_if(receivers.begin(), receivers.end(),
                               [id = *rec.selected](const ReceiverState& s) { return s.id == id; });
        if (it == receivers.end())
            throw std::logic_error("scheduler selected an unknown receiver");
        if (ctx.chargeable(*it))
        {
            rec.charged = true;
            rec.delivered_power = output_electric_power(cfg.channel, cfg.p_s, it->distance());
            const double before = it->remaining_energy;
            it->remaining_energy = std::min(it->battery_capacity,
                                            before + rec.delivered_power * cfg.t_c / seconds_per_hour);
            rec.energy_gained = it->remaining_energy - before;
        }
    }
    if (cfg.scheduler == SchedulerKind::rrc)
        state.queue.rotate();

    for (auto& s : receivers)
        s.position = step(s.position, sample_velocity(rng, cfg.v_max), cfg.t_c);

    ++state.slot;
    return rec;
}

EpisodeResult run_episode_from(const SlotContext& ctx,
                               EpisodeState state,
                               RandomStream& rng,
                               bool record_log)
{
    EpisodeResult result;
    const std::size_t slots = slot_count(ctx.cfg.t_o, ctx.cfg.t_c);
    if (record_log)
        result.log.reserve(slots);
    for (std::size_t i = 0; i < slots; ++i)
    {
        SlotRecord rec = run_slot(state, ctx, rng);
        if (record_log)
            result.log.push_back(std::move(rec));
    }
    for (const auto& s : state.receivers)
        result.total_remaining_energy += s.remaining_energy;
    result.receivers = std::move(state.receivers);
    return result;
}

EpisodeResult run_episode(const SimConfig& cfg, RandomStream& rng, bool record_log)
{
    const SlotContext ctx = SlotContext::make(cfg);
    return run_episode_from(ctx, EpisodeState::from_receivers(init_episode(cfg, rng)), rng,
                            record_log);
}

MonteCarloResult monte_carlo(const SimConfig& cfg, unsigned threads)
{
    const SlotContext ctx = SlotContext::make(cfg);
    // Surface a bad initial cone before spawning workers.
    cone_for_power(cfg, cfg.initial_cone_power());

    std::vector<double> per_run(cfg.n_runs);
    for_each_run(cfg.n_runs, threads, [&](std::uint32_t run) {
        RandomStream rng = RandomStream::for_run(cfg.seed, run);
        auto init = init_episode(cfg, rng);
        per_run[run] =
            run_episode_from(ctx, EpisodeState::from_receivers(std::move(init)), rng)
                .total_remaining_energy;
    });
    return reduce(std::move(per_run), cfg.n_r);
}

ComparisonResult compare(const SimConfig& cfg, unsigned threads)
{
    SimConfig cdc_cfg = cfg;
    cdc_cfg.scheduler = SchedulerKind::cdc;
    SimConfig rrc_cfg = cfg;
    rrc_cfg.scheduler = SchedulerKind::rrc;

    ComparisonResult out;
    out.cdc = monte_carlo(cdc_cfg, threads);
    out.rrc = monte_carlo(rrc_cfg, threads);
    out.d_sa = out.cdc.e_sa - out.rrc.e_sa;
    return out;
}

} // namespace rbc
