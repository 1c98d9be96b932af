#include "openph/numcore/ode.hpp"

#include <cmath>
#include <cstddef>

namespace openph::numcore {

IntegrationDiverged::IntegrationDiverged(double t)
    : std::runtime_error("integration diverged at t = " + std::to_string(t)), t_(t) {}

namespace {

// Scratch buffers for repeated steps without reallocation.
struct Rk4Scratch {
    std::vector<double> k1, k2, k3, k4, ytmp;

    explicit Rk4Scratch(std::size_t dim) : k1(dim), k2(dim), k3(dim), k4(dim), ytmp(dim) {}

    void check_finite(std::span<const double> v, double t) const {
        for (double x : v)
            if (!std::isfinite(x)) throw IntegrationDiverged(t);
    }

    // Advance y in place from t to t + dt.
    void step(const VectorField& f, double t, std::vector<double>& y, double dt) {
        const std::size_t dim = y.size();
        const double half = 0.5 * dt;

        f(t, y, k1);
        check_finite(k1, t);
        for (std::size_t i = 0; i < dim; ++i) ytmp[i] = y[i] + half * k1[i];

        f(t + half, ytmp, k2);
        check_finite(k2, t);
        for (std::size_t i = 0; i < dim; ++i) ytmp[i] = y[i] + half * k2[i];

        f(t + half, ytmp, k3);
        check_finite(k3, t);
        for (std::size_t i = 0; i < dim; ++i) ytmp[i] = y[i] + dt * k3[i];

        f(t + dt, ytmp, k4);
        check_finite(k4, t);
        for (std::size_t i = 0; i < dim; ++i)
            y[i] += dt / 6.0 * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);
        check_finite(y, t);
    }
};

}  // namespace

std::vector<double> rk4_step(const VectorField& f, double t, std::span<const double> y,
                             double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("rk4_step: dt must be positive");
    std::vector<double> out(y.begin(), y.end());
    Rk4Scratch scratch(out.size());
    scratch.step(f, t, out, dt);
    return out;
}

TimeSeries integrate_fixed(const VectorField& f, double t0, std::span<const double> y0,
                           double dt, long steps, std::vector<std::string> state_labels) {
    if (steps < 1) throw std::invalid_argument("integrate_fixed: steps must be >= 1");
    if (!(dt > 0.0)) throw std::invalid_argument("integrate_fixed: dt must be positive");
    if (state_labels.empty())
        for (std::size_t i = 0; i < y0.size(); ++i)
            state_labels.push_back("y" + std::to_string(i));
    if (state_labels.size() != y0.size())
        throw std::invalid_argument("integrate_fixed: one label per state component");

    std::vector<std::string> labels{"t"};
    labels.insert(labels.end(), state_labels.begin(), state_labels.end());
    TimeSeries series(std::move(labels));

    std::vector<double> y(y0.begin(), y0.end());
    Rk4Scratch scratch(y.size());

    auto emit = [&](double t) {
        std::vector<double> row{t};
        row.insert(row.end(), y.begin(), y.end());
        series.append(std::move(row));
    };

    emit(t0);
    for (long i = 0; i < steps; ++i) {
        const double t = t0 + static_cast<double>(i) * dt;
        scratch.step(f, t, y, dt);
        emit(t0 + static_cast<double>(i + 1) * dt);
    }
    return series;
}

long fixed_step_count(double t_max, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("step count: dt must be positive");
    if (!(t_max >= dt)) throw std::invalid_argument("step count: t_max must be at least dt");
    const double raw = t_max / dt;
    return static_cast<long>(std::floor(raw + raw * 1e-12 + 1e-12));
}

}  // namespace openph::numcore
