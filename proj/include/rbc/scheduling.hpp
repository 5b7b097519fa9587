#pragma once

/// \file
/// Receiver selection for one charging slot: channel-dependent charging
/// (CDC, lowest scheduling coefficient first) and round-robin charging (RRC).

#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rbc/coverage.hpp"

namespace rbc
{

enum class ReceiverId : std::uint32_t
{
};

constexpr std::uint32_t to_index(ReceiverId id) { return static_cast<std::uint32_t>(id); }

struct ReceiverState
{
    ReceiverId id{};
    Position position;
    double remaining_energy = 0.0; ///< [Wh]
    double battery_capacity = 0.0; ///< [Wh]
    std::uint32_t arrival_order = 0;

    double distance() const { return position.distance_to_transmitter(); }
    bool full() const { return remaining_energy >= battery_capacity; }
};

enum class EligibilityMode
{
    /// Only the minimum-coefficient receiver is considered; if it cannot be
    /// charged the slot stays idle.
    strict,
    /// Fall through to the next-lowest coefficient until one can be charged.
    work_conserving,
};

struct SchedulerConfig
{
    double c_e = 0.5;
    double c_d = 0.5;
    EligibilityMode eligibility = EligibilityMode::strict;
    /// Score with e_r / capacity and d / d_max instead of the raw mixed-unit sum.
    bool normalized = false;

    void validate() const;
};

/// c_e * e_r + c_d * d, watt-hours and meters summed as-is.
double scheduling_coefficient(double e_r, double d, const SchedulerConfig& cfg);

/// Coefficient as cdc_select computes it for one receiver, honoring
/// cfg.normalized.
double receiver_coefficient(const ReceiverState& s, double d_max, const SchedulerConfig& cfg);

using EligibilityTest = std::function<bool(const ReceiverState&)>;

/// Default eligibility: distance <= d_max and not full.
bool default_eligible(const ReceiverState& s, double d_max);

/// Minimum-coefficient receiver, ties to the lowest id. Empty input throws
/// std::invalid_argument.
std::optional<ReceiverId> cdc_select(std::span<const ReceiverState> states,
                                     double d_max,
                                     const SchedulerConfig& cfg);

/// Same, with a caller-supplied eligibility test.
std::optional<ReceiverId> cdc_select(std::span<const ReceiverState> states,
                                     double d_max,
                                     const SchedulerConfig& cfg,
                                     const EligibilityTest& eligible);

/// Receivers in connection order. The head is charged, then moved to the tail.
class RoundRobinQueue
{
  public:
    RoundRobinQueue() = default;
    explicit RoundRobinQueue(std::vector<ReceiverId> order);

    /// Queue in ascending arrival_order, ties by id.
    static RoundRobinQueue from_arrivals(std::span<const ReceiverState> states);

    ReceiverId head() const;
    void rotate();
    std::size_t size() const { return order_.size(); }
    bool empty() const { return order_.empty(); }
    std::vector<ReceiverId> snapshot() const { return {order_.begin(), order_.end()}; }

  private:
    std::deque<ReceiverId> order_;
};

/// Head of the queue. State and channel are ignored. Empty queue throws.
ReceiverId rrc_select(const RoundRobinQueue& queue, std::span<const ReceiverState> states);

} // namespace rbc
