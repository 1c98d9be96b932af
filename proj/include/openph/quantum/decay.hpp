#pragma once

#include <cstdint>
#include <vector>

#include "openph/numcore/series.hpp"

namespace openph::quantum {

/// Single-species radioactive decay model. Construct from either the decay
/// constant or the half-life; the other is derived via lambda * T_half = ln 2.
struct DecayModel {
    long long n0;    // initial nucleus count
    double lambda;   // decay constant, 1/s
    double dt;       // simulation step, s
    double t_max;    // horizon, s

    static DecayModel from_lambda(long long n0, double lambda, double dt, double t_max);
    static DecayModel from_half_life(long long n0, double half_life, double dt, double t_max);

    double half_life() const;
    void validate() const;
};

/// Continuous model N0 * exp(-lambda t). Real-valued: the integer-valued
/// population lives in decay_simulate.
double decay_analytic(const DecayModel& model, double t);

/// Stochastic simulation with columns (t, n_remaining, n_analytic).
///
/// Realization (fixed): at each step every surviving nucleus independently
/// survives with probability exp(-lambda*dt), one Bernoulli draw per nucleus
/// per step from the seeded stream, so the survivor count is exactly
/// binomial. exp(-lambda*dt) is the exact per-step survival probability, not
/// the first-order lambda*dt approximation.
numcore::TimeSeries decay_simulate(const DecayModel& model, std::uint64_t seed);

/// Independent runs for seeds seed0 .. seed0 + count - 1, in seed order.
/// Runs across seeds execute in parallel when OpenMP is enabled and are
/// bit-identical to decay_ensemble_serial.
std::vector<numcore::TimeSeries> decay_ensemble(const DecayModel& model, std::uint64_t seed0,
                                                int count);

/// Single-thread reference, kept for tests and benchmarks.
std::vector<numcore::TimeSeries> decay_ensemble_serial(const DecayModel& model,
                                                       std::uint64_t seed0, int count);

}  // namespace openph::quantum
