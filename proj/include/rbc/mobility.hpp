#pragma once

#include <stdexcept>

#include "rbc/coverage.hpp"
#include "rbc/random.hpp"

namespace rbc
{

/// Receiver velocity [m/s].
struct Velocity
{
    double vx = 0.0;
    double vy = 0.0;
    double vz = 0.0;
};

/// Each component is an independent uniform magnitude in [0, v_max] with an
/// independent fair sign. Draw order per component: magnitude, then sign.
/// Six draws are consumed regardless of v_max.
template <UniformSource G>
Velocity sample_velocity(G& rng, double v_max)
{
    if (!(v_max >= 0.0))
        throw std::invalid_argument("v_max must be non-negative");
    auto component = [&] {
        const double magnitude = rng.uniform() * v_max;
        return rng.uniform() < 0.5 ? -magnitude : magnitude;
    };
    Velocity v;
    v.vx = component();
    v.vy = component();
    v.vz = component();
    return v;
}

/// Straight-line move for dt seconds. No boundary handling.
Position step(const Position& p, const Velocity& v, double dt);

} // namespace rbc
