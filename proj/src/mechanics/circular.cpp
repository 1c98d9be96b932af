#include "openph/mechanics/circular.hpp"

#include <cmath>
#include <stdexcept>

namespace openph::mechanics {

void CircularMotionParams::validate() const {
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw std::invalid_argument("circular: radius must be positive");
    if (omega == 0.0 || !std::isfinite(omega))
        throw std::invalid_argument("circular: omega must be nonzero");
}

std::array<double, 2> circular_position(const CircularMotionParams& p, double t) {
    p.validate();
    const double phase = p.omega * t;
    return {p.radius * std::cos(phase), p.radius * std::sin(phase)};
}

numcore::TimeSeries circular_trajectory(const CircularMotionParams& p, double t0, double t1,
                                        int samples) {
    p.validate();
    if (!(t1 > t0)) throw std::invalid_argument("circular: t1 must be greater than t0");
    if (samples < 2) throw std::invalid_argument("circular: need at least 2 samples");

    numcore::TimeSeries out({"t", "x", "y"});
    for (int i = 0; i < samples; ++i) {
        const double s = static_cast<double>(i) / static_cast<double>(samples - 1);
        const double t = t0 * (1.0 - s) + t1 * s;
        const auto pos = circular_position(p, t);
        out.append({t, pos[0], pos[1]});
    }
    return out;
}

}  // namespace openph::mechanics
