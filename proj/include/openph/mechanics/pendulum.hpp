#pragma once

#include "openph/numcore/series.hpp"

namespace openph::mechanics {

/// Plane pendulum, theta'' = -(g/L) sin(theta). No small-angle cut: the full
/// nonlinear equation is integrated and the linearized solution is reported
/// alongside for comparison.
struct PendulumParams {
    double length;
    double g = 9.80665;
    double theta0 = 0.0;  // rad
    double omega0 = 0.0;  // rad/s

    void validate() const;
    double small_angle_period() const;  // 2 pi sqrt(L/g)
};

/// RK4 integration with columns (t, theta, omega, theta_small_angle) where
/// the last column is theta0 cos(w0 t) + (omega0/w0) sin(w0 t), w0 = sqrt(g/L).
numcore::TimeSeries simulate_pendulum(const PendulumParams& p, double dt, double t_max);

/// Total energy per unit mass at a sample: L^2 w^2 / 2 + g L (1 - cos theta).
double pendulum_energy(const PendulumParams& p, double theta, double omega);

}  // namespace openph::mechanics
