#pragma once

/// \file
/// Resonant-beam power transfer chain: input electric power at the
/// transmitter to output electric power at the receiver PV panel, and its
/// inversion to the largest transmission distance.
///
/// All powers are in watts, all lengths in meters.

namespace rbc
{

/// Physical constants of the transfer chain.
struct ChannelParams
{
    double beta = 0.3487;     ///< PV slope
    double gamma = -1.535;    ///< PV offset [W]
    double big_c = -5.64;     ///< cavity offset [W]
    double f = 0.88;          ///< output mirror reflectivity
    double m = 0.80;          ///< overlap efficiency
    double a = 1.5e-3;        ///< retro-reflector radius [m]
    double lambda = 1.064e-6; ///< beam wavelength [m]
    double eta_g = 0.2849;    ///< pump conversion efficiency
    double l = 0.0;           ///< gain medium to R1 distance [m]

    /// Throws std::invalid_argument when a field is outside its physical range.
    void validate() const;
};

/// Power stored in the gain medium: eta_g * p_s.
double stored_power(const ChannelParams& params, double p_s);

/// Single-pass diffraction loss exp(-2 pi a^2 / (lambda (l + d))), 0 at l + d = 0.
double diffraction_loss(const ChannelParams& params, double d);

/// Cavity transfer coefficient; positive and strictly decreasing in d.
double cavity_coefficient_alpha(const ChannelParams& params, double d);

/// External-cavity beam power alpha(d) * p_g + C. Not clamped: it goes
/// negative past the largest transmission distance.
double external_beam_power(const ChannelParams& params, double p_g, double d);

/// Unclamped output electric power beta * (alpha(d) eta_g p_s + C) + gamma.
double raw_output_power(const ChannelParams& params, double p_s, double d);

/// Output electric power delivered to the battery, clamped below at zero.
double output_electric_power(const ChannelParams& params, double p_s, double d);

enum class RangeKind
{
    finite,      ///< power reaches zero at a finite distance
    no_coverage, ///< power is never positive, not even at d = 0
    unbounded,   ///< power stays positive at every distance
};

const char* to_string(RangeKind kind);

/// Largest transmission distance for one input power.
struct TransmissionRange
{
    RangeKind kind = RangeKind::no_coverage;
    double meters = 0.0;      ///< meaningful only when kind == finite
    double input_power = 0.0; ///< p_s the range was computed for [W]

    bool finite() const { return kind == RangeKind::finite; }

    /// The distance; throws NoCoverageError / UnboundedRangeError otherwise.
    double value() const;
};

/// Closed-form inversion of the transfer chain at zero output power.
TransmissionRange max_transmission_distance(const ChannelParams& params, double p_s);

/// Bisection on raw_output_power. Independent of the closed form; brackets
/// by doubling up to `search_limit` meters before declaring the range
/// unbounded.
TransmissionRange max_transmission_distance_bisection(const ChannelParams& params,
                                                      double p_s,
                                                      double search_limit = 1.0e9);

} // namespace rbc
