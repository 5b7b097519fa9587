#pragma once

/// \file
/// Time-slotted charging episodes and their Monte Carlo aggregation.
///
/// One slot: every receiver's distance is taken at slot start, the scheduler
/// picks at most one receiver, the picked receiver (if it is in coverage and
/// not full) is charged at the slot-start power for the whole slot, then all
/// receivers draw a fresh velocity and move for one slot length.
///
/// Energy is kept in watt-hours; a slot adds p_e * t_c / 3600, clamped at
/// the battery capacity.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rbc/channel.hpp"
#include "rbc/coverage.hpp"
#include "rbc/random.hpp"
#include "rbc/scheduling.hpp"

namespace rbc
{

enum class SchedulerKind
{
    cdc,
    rrc,
};

const char* to_string(SchedulerKind kind);

struct SimConfig
{
    ChannelParams channel;
    SchedulerConfig scheduling;
    double p_s = 200.0;     ///< input electric power [W]
    std::uint32_t n_r = 10; ///< receiver count
    double t_c = 10.0;      ///< slot length [s]
    double t_o = 3600.0;    ///< charging horizon [s]
    double e_b = 10.35;     ///< battery capacity [Wh]
    double v_max = 0.01;    ///< per-axis speed bound [m/s]
    double fov = 100.0;     ///< transmitter field of view [deg]
    /// Input power whose coverage cone bounds the initial positions; p_s when unset.
    std::optional<double> init_cone_power;
    std::uint64_t seed = 1;
    std::uint32_t n_runs = 200;
    PositionMode position_mode = PositionMode::faithful;
    SchedulerKind scheduler = SchedulerKind::cdc;

    double initial_cone_power() const { return init_cone_power.value_or(p_s); }

    /// Throws std::invalid_argument on an inconsistent configuration.
    void validate() const;
};

/// Iterations of `for (t = 0; t <= t_o; t += t_c)`, i.e. floor(t_o / t_c) + 1
/// for exact multiples. The horizon end itself gets a slot.
std::size_t slot_count(double t_o, double t_c);

/// Everything a slot needs that does not change during an episode.
struct SlotContext
{
    SimConfig cfg;
    CoverageCone charge_cone; ///< coverage at cfg.p_s

    /// Validates cfg and resolves the charging coverage. Throws
    /// NoCoverageError / UnboundedRangeError when cfg.p_s has no finite range.
    static SlotContext make(const SimConfig& cfg);

    bool chargeable(const ReceiverState& s) const;
};

struct EpisodeState
{
    std::vector<ReceiverState> receivers;
    RoundRobinQueue queue;
    std::size_t slot = 0;

    /// Wraps receivers with a round-robin queue in arrival order.
    static EpisodeState from_receivers(std::vector<ReceiverState> receivers);
};

struct SlotRecord
{
    std::size_t slot = 0;
    std::optional<ReceiverId> selected; ///< empty for an idle slot
    bool charged = false;               ///< selected and chargeable
    double delivered_power = 0.0;       ///< [W]
    double energy_gained = 0.0;         ///< after the capacity clamp [Wh]
    std::vector<double> distances;      ///< per receiver at slot start [m]
};

struct EpisodeResult
{
    std::vector<ReceiverState> receivers;
    double total_remaining_energy = 0.0; ///< E_s [Wh]
    std::vector<SlotRecord> log;         ///< filled when requested
};

/// Initial population: positions in the cone of cfg.initial_cone_power(),
/// energies uniform in [0, e_b]. Per receiver the draws are position, then
/// energy. Throws NoCoverageError / UnboundedRangeError from the range lookup.
std::vector<ReceiverState> init_episode(const SimConfig& cfg, RandomStream& rng);

/// Advance one slot.
SlotRecord run_slot(EpisodeState& state, const SlotContext& ctx, RandomStream& rng);

/// Run slot_count(t_o, t_c) slots from a given population.
EpisodeResult run_episode_from(const SlotContext& ctx,
                               EpisodeState state,
                               RandomStream& rng,
                               bool record_log = false);

/// init_episode followed by run_episode_from.
EpisodeResult run_episode(const SimConfig& cfg, RandomStream& rng, bool record_log = false);

struct MonteCarloResult
{
    double e_sa = 0.0;               ///< mean remaining energy per receiver [Wh]
    double sd = 0.0;                 ///< sample SD of per-run E_s / n_r [Wh]
    std::vector<double> per_run;     ///< E_s by run index [Wh]
    std::uint32_t n_r = 0;
};

struct ComparisonResult
{
    MonteCarloResult cdc;
    MonteCarloResult rrc;
    double d_sa = 0.0; ///< cdc.e_sa - rrc.e_sa [Wh]
};

/// cfg.n_runs episodes of cfg.scheduler. Run i uses
/// RandomStream::for_run(cfg.seed, i); results are reduced in run order so the
/// output does not depend on `threads` (0 picks the hardware concurrency).
MonteCarloResult monte_carlo(const SimConfig& cfg, unsigned threads = 1);

/// CDC and RRC on paired streams: for each run index both schedulers see the
/// same initial population and the same velocity draws.
ComparisonResult compare(const SimConfig& cfg, unsigned threads = 1);

} // namespace rbc
