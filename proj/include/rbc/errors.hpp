#pragma once

#include <stdexcept>
#include <string>

namespace rbc
{

/// The input power never delivers positive output power.
class NoCoverageError : public std::runtime_error
{
  public:
    explicit NoCoverageError(double p_s);
    double input_power() const { return p_s_; }

  private:
    double p_s_;
};

/// The input power delivers positive output power at every distance.
class UnboundedRangeError : public std::runtime_error
{
  public:
    explicit UnboundedRangeError(double p_s);
    double input_power() const { return p_s_; }

  private:
    double p_s_;
};

} // namespace rbc
