#pragma once

#include <array>

#include "openph/numcore/series.hpp"

namespace openph::mechanics {

struct CircularMotionParams {
    double radius;
    double omega;  // signed angular velocity, rad/s

    void validate() const;
};

/// Position at time t: (R cos(omega t), R sin(omega t)).
std::array<double, 2> circular_position(const CircularMotionParams& p, double t);

/// Uniformly sampled trajectory with columns (t, x, y). samples >= 2 rows
/// from t0 to t1 inclusive.
numcore::TimeSeries circular_trajectory(const CircularMotionParams& p, double t0, double t1,
                                        int samples);

}  // namespace openph::mechanics
