#pragma once

#include <numbers>
#include <stdexcept>

namespace openph::quantum {

/// Physical constants used by the quantum operations. The CODATA 2018 values
/// of h and e are exact by definition of the SI.
struct PhysicalConstants {
    double h;     // Planck constant, J s
    double e;     // elementary charge, C
    double m_e;   // electron mass, kg
    double hbar;  // h / (2 pi), J s

    static PhysicalConstants codata2018() {
        const double h = 6.62607015e-34;
        return {h, 1.602176634e-19, 9.1093837015e-31, h / (2.0 * std::numbers::pi)};
    }

    void validate() const {
        if (!(h > 0.0 && e > 0.0 && m_e > 0.0 && hbar > 0.0))
            throw std::invalid_argument("PhysicalConstants: all constants must be positive");
    }
};

}  // namespace openph::quantum
