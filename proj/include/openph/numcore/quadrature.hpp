#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>

namespace openph::numcore {

// Composite trapezoid rule over uniformly spaced samples. Exact for affine data.
inline double trapezoid(std::span<const double> values, double dx) {
    if (values.size() < 2) throw std::invalid_argument("trapezoid: need at least 2 samples");
    if (!(dx > 0.0)) throw std::invalid_argument("trapezoid: dx must be positive");
    double sum = 0.5 * (values.front() + values.back());
    for (std::size_t i = 1; i + 1 < values.size(); ++i) sum += values[i];
    return sum * dx;
}

}  // namespace openph::numcore
