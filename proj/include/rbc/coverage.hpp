#pragma once

/// \file
/// Conical transmitter coverage and initial receiver placement.
///
/// The transmitter sits at the origin and the cone axis runs along +z.

#include <cmath>
#include <numbers>

#include "rbc/random.hpp"

namespace rbc
{

struct Position
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double distance_to_transmitter() const { return std::sqrt(x * x + y * y + z * z); }
    friend bool operator==(const Position&, const Position&) = default;
};

struct CoverageCone
{
    double fov = 100.0;  ///< full apex angle [deg]
    double d_max = 0.0;  ///< largest transmission distance [m]
    double h = 0.0;      ///< cone height [m]
    double r = 0.0;      ///< base radius [m]

    double half_angle_rad() const { return fov * std::numbers::pi / 360.0; }
};

/// How receiver positions are drawn and tested against the coverage.
enum class PositionMode
{
    /// Three chained uniform draws exactly as the published pseudo-code writes
    /// them; coverage is the distance test alone.
    faithful,
    /// Uniform by volume inside the apex-at-origin cone; coverage also
    /// requires lying inside that cone.
    geometric,
};

/// h = d_max cos(fov/2), r = d_max sin(fov/2). Requires d_max > 0 and
/// 0 < fov < 180, else std::invalid_argument.
CoverageCone cone_from_distance(double d_max, double fov);

/// Coverage test. Faithful: distance <= d_max. Geometric: additionally
/// 0 <= z <= h and the radial offset is within z tan(fov/2).
bool in_coverage(const Position& p, const CoverageCone& cone, PositionMode mode);

/// Draw one initial position.
///
/// Faithful mode: z = u1 h, x = u2 (h - z) tan(fov/2), y = u3 sqrt(r^2 - x^2).
/// The (h - z) factor makes the widest slice sit at z = 0, which does not
/// match an apex-at-origin cone; it is kept as published. Every draw lies
/// within d_max of the origin.
///
/// Geometric mode: z = h u1^(1/3), radius z tan(fov/2) sqrt(u2), angle 2 pi u3.
template <UniformSource G>
Position sample_initial_position(G& rng, const CoverageCone& cone, PositionMode mode)
{
    const double tan_half = std::tan(cone.half_angle_rad());
    if (mode == PositionMode::faithful)
    {
        const double c1 = rng.uniform() * cone.h;
        const double c2 = rng.uniform() * ((cone.h - c1) * tan_half);
        const double c3 = rng.uniform() * std::sqrt(std::fmax(0.0, cone.r * cone.r - c2 * c2));
        return {c2, c3, c1};
    }
    const double z = cone.h * std::cbrt(rng.uniform());
    const double rho = z * tan_half * std::sqrt(rng.uniform());
    const double phi = 2.0 * std::numbers::pi * rng.uniform();
    return {rho * std::cos(phi), rho * std::sin(phi), z};
}

} // namespace rbc
