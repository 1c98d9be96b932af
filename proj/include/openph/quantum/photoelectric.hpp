#pragma once

#include <stdexcept>

#include "openph/quantum/constants.hpp"

namespace openph::quantum {

/// Incident light frequency and the surface's threshold frequency, both in Hz.
struct PhotoelectricInput {
    double f;
    double f0;

    void validate() const {
        if (!(f > 0.0)) throw std::invalid_argument("photoelectric: f must be positive");
        if (!(f0 > 0.0)) throw std::invalid_argument("photoelectric: f0 must be positive");
    }
};

/// No electrons are emitted below the threshold frequency.
class BelowThreshold : public std::domain_error {
  public:
    BelowThreshold(double f, double f0);
};

/// Kinetic energy h*(f - f0) of the fastest emitted electron, in J.
double max_kinetic_energy(const PhotoelectricInput& inp, const PhysicalConstants& consts);

/// Speed of the fastest emitted electron, sqrt(2 E_k / m_e), in m/s.
double max_speed(const PhotoelectricInput& inp, const PhysicalConstants& consts);

/// Reverse potential at which the photocurrent vanishes: E_k / e, in V.
double stopping_voltage(const PhotoelectricInput& inp, const PhysicalConstants& consts);

}  // namespace openph::quantum
