#include "openph/mechanics/oscillator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <span>

#include "openph/numcore/ode.hpp"

namespace openph::mechanics {

void OscillatorParams::validate() const {
    if (!(m > 0.0) || !std::isfinite(m))
        throw std::invalid_argument("oscillator: mass must be positive");
    if (!(k > 0.0) || !std::isfinite(k))
        throw std::invalid_argument("oscillator: spring constant must be positive");
    if (!(r >= 0.0) || !std::isfinite(r))
        throw std::invalid_argument("oscillator: damping must be non-negative");
    if (!(F0 >= 0.0) || !std::isfinite(F0))
        throw std::invalid_argument("oscillator: drive amplitude must be non-negative");
    if (!(omega_d >= 0.0) || !std::isfinite(omega_d))
        throw std::invalid_argument("oscillator: drive frequency must be non-negative");
    if (!std::isfinite(x0) || !std::isfinite(v0))
        throw std::invalid_argument("oscillator: initial conditions must be finite");
}

double OscillatorParams::natural_frequency() const {
    return std::sqrt(k / m);
}

UndampedResonance::UndampedResonance()
    : std::domain_error(
          "oscillator: undamped resonance (r = 0, omega_d = sqrt(k/m)) has no steady-state "
          "amplitude") {}

namespace {

double acceleration(const OscillatorParams& p, double t, double x, double v) {
    return (p.F0 * std::cos(p.omega_d * t) - p.r * v - p.k * x) / p.m;
}

void check_steady_state(const OscillatorParams& p) {
    p.validate();
    const double stiffness = p.k - p.m * p.omega_d * p.omega_d;
    if (stiffness == 0.0 && p.r * p.omega_d == 0.0) throw UndampedResonance();
}

}  // namespace

double steady_state_amplitude(const OscillatorParams& p) {
    check_steady_state(p);
    const double stiffness = p.k - p.m * p.omega_d * p.omega_d;
    const double damping = p.r * p.omega_d;
    return p.F0 / std::hypot(stiffness, damping);
}

double steady_state_phase(const OscillatorParams& p) {
    check_steady_state(p);
    return std::atan2(p.r * p.omega_d, p.k - p.m * p.omega_d * p.omega_d);
}

numcore::TimeSeries simulate_oscillator(const OscillatorParams& p, double dt, double t_max) {
    p.validate();
    const long steps = numcore::fixed_step_count(t_max, dt);

    const numcore::VectorField field = [&p](double t, std::span<const double> y,
                                            std::span<double> dydt) {
        dydt[0] = y[1];
        dydt[1] = acceleration(p, t, y[0], y[1]);
    };
    const auto states = numcore::integrate_fixed(field, 0.0, std::array{p.x0, p.v0}, dt, steps,
                                                 {"x", "v"});

    numcore::TimeSeries out({"t", "x", "v", "a"});
    for (std::size_t i = 0; i < states.rows(); ++i) {
        const double t = states.at(i, 0);
        const double x = states.at(i, 1);
        const double v = states.at(i, 2);
        out.append({t, x, v, acceleration(p, t, x, v)});
    }
    return out;
}

OscillatorComparison compare_analytic_numeric(const OscillatorParams& p, double dt, double t_max) {
    const double amplitude = steady_state_amplitude(p);
    const double phase = steady_state_phase(p);

    // Transient matched so that x(0) = x0 and x'(0) = v0 overall.
    const double xh0 = p.x0 - amplitude * std::cos(phase);
    const double vh0 = p.v0 - amplitude * p.omega_d * std::sin(phase);
    const double gamma = p.r / (2.0 * p.m);
    const double disc = p.r * p.r - 4.0 * p.m * p.k;

    enum class Regime { Under, Critical, Over };
    Regime regime = Regime::Critical;
    if (std::abs(disc) >= 1e-9 * (p.r * p.r + 4.0 * p.m * p.k))
        regime = disc < 0.0 ? Regime::Under : Regime::Over;

    double c1 = 0.0, c2 = 0.0, omega1 = 0.0, s1 = 0.0, s2 = 0.0;
    switch (regime) {
        case Regime::Under:
            omega1 = std::sqrt(-disc) / (2.0 * p.m);
            c1 = xh0;
            c2 = (vh0 + gamma * xh0) / omega1;
            break;
        case Regime::Critical:
            c1 = xh0;
            c2 = vh0 + gamma * xh0;
            break;
        case Regime::Over:
            s1 = (-p.r + std::sqrt(disc)) / (2.0 * p.m);
            s2 = (-p.r - std::sqrt(disc)) / (2.0 * p.m);
            c1 = (vh0 - s2 * xh0) / (s1 - s2);
            c2 = xh0 - c1;
            break;
    }

    const auto analytic = [&](double t) {
        const double steady = amplitude * std::cos(p.omega_d * t - phase);
        switch (regime) {
            case Regime::Under:
                return steady + std::exp(-gamma * t) *
                                    (c1 * std::cos(omega1 * t) + c2 * std::sin(omega1 * t));
            case Regime::Critical:
                return steady + std::exp(-gamma * t) * (c1 + c2 * t);
            case Regime::Over:
            default:
                return steady + c1 * std::exp(s1 * t) + c2 * std::exp(s2 * t);
        }
    };

    const auto numeric = simulate_oscillator(p, dt, t_max);
    numcore::TimeSeries table({"t", "x_numeric", "x_analytic", "abs_error"});
    for (std::size_t i = 0; i < numeric.rows(); ++i) {
        const double t = numeric.at(i, 0);
        const double x_num = numeric.at(i, 1);
        const double x_ana = analytic(t);
        table.append({t, x_num, x_ana, std::abs(x_num - x_ana)});
    }

    const std::size_t rows = table.rows();
    const std::size_t tail_start = rows - std::max<std::size_t>(1, rows / 5);
    double tail_error = 0.0;
    for (std::size_t i = tail_start; i < rows; ++i)
        tail_error = std::max(tail_error, table.at(i, 3));

    return {std::move(table), tail_error};
}

}  // namespace openph::mechanics
