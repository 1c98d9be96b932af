#include "openph/mechanics/pendulum.hpp"

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>

#include "openph/numcore/ode.hpp"

namespace openph::mechanics {

void PendulumParams::validate() const {
    if (!(length > 0.0) || !std::isfinite(length))
        throw std::invalid_argument("pendulum: length must be positive");
    if (!(g > 0.0) || !std::isfinite(g))
        throw std::invalid_argument("pendulum: g must be positive");
    if (!std::isfinite(theta0) || !std::isfinite(omega0))
        throw std::invalid_argument("pendulum: initial conditions must be finite");
}

double PendulumParams::small_angle_period() const {
    return 2.0 * std::numbers::pi * std::sqrt(length / g);
}

numcore::TimeSeries simulate_pendulum(const PendulumParams& p, double dt, double t_max) {
    p.validate();
    const long steps = numcore::fixed_step_count(t_max, dt);
    const double w0 = std::sqrt(p.g / p.length);

    const numcore::VectorField field = [&p](double, std::span<const double> y,
                                            std::span<double> dydt) {
        dydt[0] = y[1];
        dydt[1] = -(p.g / p.length) * std::sin(y[0]);
    };
    const auto states = numcore::integrate_fixed(field, 0.0, std::array{p.theta0, p.omega0}, dt,
                                                 steps, {"theta", "omega"});

    numcore::TimeSeries out({"t", "theta", "omega", "theta_small_angle"});
    for (std::size_t i = 0; i < states.rows(); ++i) {
        const double t = states.at(i, 0);
        const double linear =
            p.theta0 * std::cos(w0 * t) + (p.omega0 / w0) * std::sin(w0 * t);
        out.append({t, states.at(i, 1), states.at(i, 2), linear});
    }
    return out;
}

double pendulum_energy(const PendulumParams& p, double theta, double omega) {
    p.validate();
    return 0.5 * p.length * p.length * omega * omega +
           p.g * p.length * (1.0 - std::cos(theta));
}

}  // namespace openph::mechanics
