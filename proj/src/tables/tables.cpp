#include "openph/tables/tables.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace openph::tables {

void TableSpec::validate_temperature() const {
    if (!(step > 0.0) || !std::isfinite(step))
        throw std::invalid_argument("tables: step must be positive");
    if (!(stop >= start) || !std::isfinite(start) || !std::isfinite(stop))
        throw std::invalid_argument("tables: stop must be at least start");
}

void TableSpec::validate_stirling() const {
    if (n_max < 1 || n_max > 170)
        throw std::invalid_argument("tables: n_max must be in [1, 170]");
}

numcore::TimeSeries fahrenheit_celsius_table(const TableSpec& spec) {
    spec.validate_temperature();
    // Nudge so a stop that lands on a grid point (up to rounding) is kept.
    const double raw = (spec.stop - spec.start) / spec.step;
    const long last = static_cast<long>(std::floor(raw + raw * 1e-12 + 1e-12));

    numcore::TimeSeries out({"celsius", "fahrenheit"});
    for (long i = 0; i <= last; ++i) {
        const double c = spec.start + static_cast<double>(i) * spec.step;
        out.append({c, 9.0 * c / 5.0 + 32.0});
    }
    return out;
}

numcore::TimeSeries stirling_table(int n_max) {
    TableSpec spec{0.0, 0.0, 1.0, n_max};
    spec.validate_stirling();

    numcore::TimeSeries out({"n", "factorial", "stirling", "relative_error"});
    double factorial = 1.0;
    for (int n = 1; n <= n_max; ++n) {
        factorial *= static_cast<double>(n);
        const double stirling = std::sqrt(2.0 * std::numbers::pi * n) *
                                std::pow(static_cast<double>(n) / std::numbers::e, n);
        out.append({static_cast<double>(n), factorial, stirling,
                    (factorial - stirling) / factorial});
    }
    return out;
}

}  // namespace openph::tables
