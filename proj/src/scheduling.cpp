#include "rbc/scheduling.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rbc
{

void SchedulerConfig::validate() const
{
    if (!(c_e >= 0.0) || !(c_d >= 0.0) || !(c_e + c_d > 0.0))
        throw std::invalid_argument("scheduler weights must be non-negative with a positive sum");
}

double scheduling_coefficient(double e_r, double d, const SchedulerConfig& cfg)
{
    return cfg.c_e * e_r + cfg.c_d * d;
}

double receiver_coefficient(const ReceiverState& s, double d_max, const SchedulerConfig& cfg)
{
    if (!cfg.normalized)
        return scheduling_coefficient(s.remaining_energy, s.distance(), cfg);
    const double e = s.battery_capacity > 0.0 ? s.remaining_energy / s.battery_capacity : 0.0;
    const double d = d_max > 0.0 ? s.distance() / d_max : 0.0;
    return scheduling_coefficient(e, d, cfg);
}

bool default_eligible(const ReceiverState& s, double d_max)
{
    return s.distance() <= d_max && s.remaining_energy < s.battery_capacity;
}

std::optional<ReceiverId> cdc_select(std::span<const ReceiverState> states,
                                     double d_max,
                                     const SchedulerConfig& cfg)
{
    return cdc_select(states, d_max, cfg,
                      [d_max](const ReceiverState& s) { return default_eligible(s, d_max); });
}

std::optional<ReceiverId> cdc_select(std::span<const ReceiverState> states,
                                     double d_max,
                                     const SchedulerConfig& cfg,
                                     const EligibilityTest& eligible)
{
    if (states.empty())
        throw std::invalid_argument("cdc_select needs at least one receiver");

    struct Ranked
    {
        double score;
        ReceiverId id;
        std::size_t index;
    };
    std::vector<Ranked> ranked;
    ranked.reserve(states.size());
    for (std::size_t i = 0; i < states.size(); ++i)
        ranked.push_back({receiver_coefficient(states[i], d_max, cfg), states[i].id, i});

    auto before = [](const Ranked& a, const Ranked& b) {
        if (a.score != b.score)
            return a.score < b.score;
        return to_index(a.id) < to_index(b.id);
    };

    if (cfg.eligibility == EligibilityMode::strict)
    {
        const auto best = std::min_element(ranked.begin(), ranked.end(), before);
        if (eligible(states[best->index]))
            return best->id;
        return std::nullopt;
    }

    std::sort(ranked.begin(), ranked.end(), before);
    for (const auto& r : ranked)
        if (eligible(states[r.index]))
            return r.id;
    return std::nullopt;
}

RoundRobinQueue::RoundRobinQueue(std::vector<ReceiverId> order)
    : order_(order.begin(), order.end())
{
}

RoundRobinQueue RoundRobinQueue::from_arrivals(std::span<const ReceiverState> states)
{
    std::vector<std::size_t> idx(states.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (states[a].arrival_order != states[b].arrival_order)
            return states[a].arrival_order < states[b].arrival_order;
        return to_index(states[a].id) < to_index(states[b].id);
    });
    std::vector<ReceiverId> order;
    order.reserve(idx.size());
    for (auto i : idx)
        order.push_back(states[i].id);
    return RoundRobinQueue(std::move(order));
}

ReceiverId RoundRobinQueue::head() const
{
    if (order_.empty())
        throw std::invalid_argument("round-robin queue is empty");
    return order_.front();
}

void RoundRobinQueue::rotate()
{
    if (order_.empty())
        return;
    order_.push_back(order_.front());
    order_.pop_front();
}

ReceiverId rrc_select(const RoundRobinQueue& queue, std::span<const ReceiverState>)
{
    return queue.head();
}

} // namespace rbc
