#include "rbc/mobility.hpp"

namespace rbc
{

Position step(const Position& p, const Velocity& v, double dt)
{
    if (!(dt >= 0.0))
        throw std::invalid_argument("time step must be non-negative");
    return {p.x + v.vx * dt, p.y + v.vy * dt, p.z + v.vz * dt};
}

} // namespace rbc
