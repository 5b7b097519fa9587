#include "rbc/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "rbc/errors.hpp"

namespace rbc
{
namespace
{

void require_non_negative(double value, const char* name)
{
    if (!(value >= 0.0))
        throw std::invalid_argument(std::string(name) + " must be non-negative, got " +
                                    std::to_string(value));
}

// 2 pi a^2 / lambda, the diffraction exponent scale [m].
double fresnel_length(const ChannelParams& params)
{
    return 2.0 * std::numbers::pi * params.a * params.a / params.lambda;
}

} // namespace

void ChannelParams::validate() const
{
    if (!(f > 0.0 && f < 1.0))
        throw std::invalid_argument("channel.f must lie in (0, 1)");
    if (!(m > 0.0 && m <= 1.0))
        throw std::invalid_argument("channel.m must lie in (0, 1]");
    if (!(eta_g > 0.0 && eta_g <= 1.0))
        throw std::invalid_argument("channel.eta_g must lie in (0, 1]");
    if (!(a > 0.0))
        throw std::invalid_argument("channel.a must be positive");
    if (!(lambda > 0.0))
        throw std::invalid_argument("channel.lambda must be positive");
    if (!(l >= 0.0))
        throw std::invalid_argument("channel.l must be non-negative");
    if (!std::isfinite(beta) || !std::isfinite(gamma) || !std::isfinite(big_c))
        throw std::invalid_argument("channel.beta, gamma and big_c must be finite");
}

double stored_power(const ChannelParams& params, double p_s)
{
    require_non_negative(p_s, "input power");
    return params.eta_g * p_s;
}

double diffraction_loss(const ChannelParams& params, double d)
{
    require_non_negative(d, "distance");
    const double path = params.l + d;
    if (path == 0.0)
        return 0.0;
    return std::exp(-fresnel_length(params) / path);
}

double cavity_coefficient_alpha(const ChannelParams& params, double d)
{
    const double delta = diffraction_loss(params, d);
    const double one_plus_f = 1.0 + params.f;
    return 2.0 * (1.0 - params.f) * params.m /
           (one_plus_f * delta - one_plus_f * std::log(params.f));
}

double external_beam_power(const ChannelParams& params, double p_g, double d)
{
    require_non_negative(p_g, "stored power");
    return cavity_coefficient_alpha(params, d) * p_g + params.big_c;
}

double raw_output_power(const ChannelParams& params, double p_s, double d)
{
    const double p_ob = external_beam_power(params, stored_power(params, p_s), d);
    return params.beta * p_ob + params.gamma;
}

double output_electric_power(const ChannelParams& params, double p_s, double d)
{
    const double p_e = raw_output_power(params, p_s, d);
    return p_e > 0.0 ? p_e : 0.0;
}

const char* to_string(RangeKind kind)
{
    switch (kind)
    {
    case RangeKind::finite:
        return "finite";
    case RangeKind::no_coverage:
        return "no_coverage";
    case RangeKind::unbounded:
        return "unbounded";
    }
    return "unknown";
}

double TransmissionRange::value() const
{
    switch (kind)
    {
    case RangeKind::finite:
        return meters;
    case RangeKind::no_coverage:
        throw NoCoverageError(input_power);
    case RangeKind::unbounded:
        throw UnboundedRangeError(input_power);
    }
    return meters;
}

TransmissionRange max_transmission_distance(const ChannelParams& params, double p_s)
{
    require_non_negative(p_s, "input power");

    // Beam power the PV panel needs to break even: beta * p_ob + gamma = 0.
    const double required = -params.gamma / params.beta - params.big_c;
    if (p_s == 0.0)
        return {required >= 0.0 ? RangeKind::no_coverage : RangeKind::unbounded, 0.0, p_s};
    if (required <= 0.0)
        return {RangeKind::unbounded, 0.0, p_s};

    const double alpha_root = required / (params.eta_g * p_s);
    const double delta_root = 2.0 * (1.0 - params.f) * params.m /
                                  ((1.0 + params.f) * alpha_root) +
                              std::log(params.f);
    if (delta_root >= 1.0)
        return {RangeKind::unbounded, 0.0, p_s};
    if (delta_root <= 0.0)
        return {RangeKind::no_coverage, 0.0, p_s};

    const double d = fresnel_length(params) / std::log(1.0 / delta_root) - params.l;
    if (!(d > 0.0))
        return {RangeKind::no_coverage, 0.0, p_s};
    return {RangeKind::finite, d, p_s};
}

TransmissionRange max_transmission_distance_bisection(const ChannelParams& params,
                                                      double p_s,
                                                      double search_limit)
{
    require_non_negative(p_s, "input power");
    auto power = [&](double d) { return raw_output_power(params, p_s, d); };

    if (power(0.0) <= 0.0)
        return {RangeKind::no_coverage, 0.0, p_s};

    double lo = 0.0;
    double hi = 1.0;
    while (power(hi) > 0.0)
    {
        lo = hi;
        hi *= 2.0;
        if (hi > search_limit)
            return {RangeKind::unbounded, 0.0, p_s};
    }

    // Invariant: power(lo) > 0 >= power(hi).
    for (int iter = 0; iter < 2000; ++iter)
    {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi)
            break;
        if (power(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return {RangeKind::finite, hi, p_s};
}

} // namespace rbc
