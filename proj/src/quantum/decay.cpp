#include "openph/quantum/decay.hpp"

#include <cmath>
#include <stdexcept>

#include "openph/numcore/ode.hpp"
#include "openph/numcore/rng.hpp"

namespace openph::quantum {

namespace {
constexpr double kLn2 = 0.6931471805599453;
}

DecayModel DecayModel::from_lambda(long long n0, double lambda, double dt, double t_max) {
    DecayModel m{n0, lambda, dt, t_max};
    m.validate();
    return m;
}

DecayModel DecayModel::from_half_life(long long n0, double half_life, double dt, double t_max) {
    if (!(half_life > 0.0)) throw std::invalid_argument("decay: half-life must be positive");
    return from_lambda(n0, kLn2 / half_life, dt, t_max);
}

double DecayModel::half_life() const {
    return kLn2 / lambda;
}

void DecayModel::validate() const {
    if (n0 < 1) throw std::invalid_argument("decay: n0 must be at least 1");
    if (!(lambda >= 0.0) || !std::isfinite(lambda))
        throw std::invalid_argument("decay: lambda must be finite and non-negative");
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw std::invalid_argument("decay: dt must be positive");
    if (!(t_max >= dt) || !std::isfinite(t_max))
        throw std::invalid_argument("decay: t_max must be at least dt");
}

double decay_analytic(const DecayModel& model, double t) {
    model.validate();
    if (!(t >= 0.0)) throw std::invalid_argument("decay: t must be non-negative");
    return static_cast<double>(model.n0) * std::exp(-model.lambda * t);
}

numcore::TimeSeries decay_simulate(const DecayModel& model, std::uint64_t seed) {
    model.validate();
    const long steps = numcore::fixed_step_count(model.t_max, model.dt);
    const double p_survive = std::exp(-model.lambda * model.dt);

    numcore::RngStream rng(seed);
    numcore::TimeSeries out({"t", "n_remaining", "n_analytic"});

    long long alive = model.n0;
    out.append({0.0, static_cast<double>(alive), decay_analytic(model, 0.0)});
    for (long i = 1; i <= steps; ++i) {
        long long survivors = 0;
        for (long long j = 0; j < alive; ++j) {
            if (rng.uniform() < p_survive) ++survivors;
        }
        alive = survivors;
        const double t = model.dt * static_cast<double>(i);
        out.append({t, static_cast<double>(alive), decay_analytic(model, t)});
    }
    return out;
}

namespace {

std::vector<numcore::TimeSeries> ensemble_impl(const DecayModel& model, std::uint64_t seed0,
                                               int count, bool parallel) {
    model.validate();
    if (count < 1) throw std::invalid_argument("decay: ensemble count must be at least 1");

    std::vector<numcore::TimeSeries> runs(static_cast<std::size_t>(count),
                                          numcore::TimeSeries({"t", "n_remaining", "n_analytic"}));
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < count; ++i) {
            runs[static_cast<std::size_t>(i)] =
                decay_simulate(model, seed0 + static_cast<std::uint64_t>(i));
        }
    } else {
        for (int i = 0; i < count; ++i) {
            runs[static_cast<std::size_t>(i)] =
                decay_simulate(model, seed0 + static_cast<std::uint64_t>(i));
        }
    }
    return runs;
}

}  // namespace

std::vector<numcore::TimeSeries> decay_ensemble(const DecayModel& model, std::uint64_t seed0,
                                                int count) {
    return ensemble_impl(model, seed0, count, true);
}

std::vector<numcore::TimeSeries> decay_ensemble_serial(const DecayModel& model,
                                                       std::uint64_t seed0, int count) {
    return ensemble_impl(model, seed0, count, false);
}

}  // namespace openph::quantum
