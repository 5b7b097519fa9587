#include "rbc/coverage.hpp"

#include <stdexcept>

namespace rbc
{

CoverageCone cone_from_distance(double d_max, double fov)
{
    if (!(d_max > 0.0) || !std::isfinite(d_max))
        throw std::invalid_argument("coverage distance must be positive and finite");
    if (!(fov > 0.0 && fov < 180.0))
        throw std::invalid_argument("field of view must lie in (0, 180) degrees");
    CoverageCone cone;
    cone.fov = fov;
    cone.d_max = d_max;
    const double half = cone.half_angle_rad();
    cone.h = d_max * std::cos(half);
    cone.r = d_max * std::sin(half);
    return cone;
}

bool in_coverage(const Position& p, const CoverageCone& cone, PositionMode mode)
{
    if (p.distance_to_transmitter() > cone.d_max)
        return false;
    if (mode == PositionMode::faithful)
        return true;
    if (p.z < 0.0 || p.z > cone.h)
        return false;
    return std::hypot(p.x, p.y) <= p.z * std::tan(cone.half_angle_rad());
}

} // namespace rbc
