#include "rbc/errors.hpp"

namespace rbc
{

NoCoverageError::NoCoverageError(double p_s)
    : std::runtime_error("input power " + std::to_string(p_s) +
                         " W never delivers positive output power"),
      p_s_(p_s)
{
}

UnboundedRangeError::UnboundedRangeError(double p_s)
    : std::runtime_error("input power " + std::to_string(p_s) +
                         " W delivers positive output power at every distance"),
      p_s_(p_s)
{
}

} // namespace rbc
