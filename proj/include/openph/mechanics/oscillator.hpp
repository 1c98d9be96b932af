#pragma once

#include <stdexcept>

#include "openph/numcore/series.hpp"

namespace openph::mechanics {

/// m x'' + r x' + k x = F0 cos(omega_d t)
struct OscillatorParams {
    double m;
    double k;
    double r;        // viscous damping coefficient, >= 0
    double F0;       // drive amplitude, >= 0
    double omega_d;  // drive frequency, >= 0
    double x0;
    double v0;

    void validate() const;
    double natural_frequency() const;  // sqrt(k/m)
};

/// Thrown by the steady-state formulas when r = 0 and omega_d = sqrt(k/m):
/// the particular solution grows without bound and has no amplitude.
class UndampedResonance : public std::domain_error {
  public:
    UndampedResonance();
};

/// Amplitude of the steady-state response, F0 / sqrt((k - m w^2)^2 + (r w)^2).
double steady_state_amplitude(const OscillatorParams& p);

/// Phase lag of the response behind the drive, atan2(r w, k - m w^2),
/// in [0, pi].
double steady_state_phase(const OscillatorParams& p);

/// RK4 integration with columns (t, x, v, a) where a is the instantaneous
/// acceleration (F0 cos(w t) - r v - k x) / m.
numcore::TimeSeries simulate_oscillator(const OscillatorParams& p, double dt, double t_max);

struct OscillatorComparison {
    numcore::TimeSeries table;  // t, x_numeric, x_analytic, abs_error
    double max_abs_error_tail;  // max |x_numeric - x_analytic| over the last 20% of rows
};

/// Closed-form solution (steady state plus matched transient, covering the
/// under-, over-, and critically damped branches, r = 0 included) evaluated
/// against the RK4 trajectory. Undefined only at undamped resonance.
OscillatorComparison compare_analytic_numeric(const OscillatorParams& p, double dt, double t_max);

}  // namespace openph::mechanics
