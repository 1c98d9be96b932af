#include "openph/mechanics/string.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace openph::mechanics {

void StringParams::validate() const {
    if (!(length > 0.0) || !std::isfinite(length))
        throw std::invalid_argument("string: length must be positive");
    if (!(tension > 0.0) || !std::isfinite(tension))
        throw std::invalid_argument("string: tension must be positive");
    if (!(mu > 0.0) || !std::isfinite(mu))
        throw std::invalid_argument("string: linear density must be positive");
    if (!(y_m > 0.0) || !std::isfinite(y_m))
        throw std::invalid_argument("string: amplitude must be positive");
    if (n < 1) throw std::invalid_argument("string: mode number must be at least 1");
}

double wave_speed(double tension, double mu) {
    if (!(tension > 0.0) || !std::isfinite(tension))
        throw std::invalid_argument("string: tension must be positive");
    if (!(mu > 0.0) || !std::isfinite(mu))
        throw std::invalid_argument("string: linear density must be positive");
    return std::sqrt(tension / mu);
}

double resonance_frequency(const StringParams& p) {
    p.validate();
    return static_cast<double>(p.n) * wave_speed(p.tension, p.mu) / (2.0 * p.length);
}

namespace {

void check_domain(const StringParams& p, double x) {
    if (!(x >= 0.0) || !(x <= p.length))
        throw std::domain_error("string: x must lie in [0, L]");
}

}  // namespace

double standing_wave(const StringParams& p, double x, double t) {
    p.validate();
    check_domain(p, x);
    const double k = static_cast<double>(p.n) * std::numbers::pi / p.length;
    const double w = 2.0 * std::numbers::pi * resonance_frequency(p);
    return p.y_m * std::sin(k * x) * std::cos(w * t);
}

double traveling_superposition(double y_m, double k_wave, double omega, double x, double t) {
    return y_m * std::sin(k_wave * x - omega * t) + y_m * std::sin(k_wave * x + omega * t);
}

std::vector<double> node_positions(const StringParams& p) {
    p.validate();
    std::vector<double> nodes;
    nodes.reserve(static_cast<std::size_t>(p.n) + 1);
    for (int j = 0; j <= p.n; ++j)
        nodes.push_back(static_cast<double>(j) * p.length / static_cast<double>(p.n));
    return nodes;
}

numcore::TimeSeries string_animation_frames(const StringParams& p, int frames, int points) {
    p.validate();
    if (frames < 1) throw std::invalid_argument("string: need at least 1 frame");
    if (points < 2) throw std::invalid_argument("string: need at least 2 points");

    std::vector<std::string> labels{"t"};
    for (int j = 0; j < points; ++j) labels.push_back("y_" + std::to_string(j));

    const double period = 1.0 / resonance_frequency(p);
    numcore::TimeSeries out(std::move(labels));
    for (int i = 0; i < frames; ++i) {
        const double t =
            frames == 1 ? 0.0 : period * static_cast<double>(i) / static_cast<double>(frames - 1);
        std::vector<double> row;
        row.reserve(static_cast<std::size_t>(points) + 1);
        row.push_back(t);
        for (int j = 0; j < points; ++j) {
            const double x = static_cast<double>(j) * p.length / static_cast<double>(points - 1);
            row.push_back(standing_wave(p, x, t));
        }
        out.append(std::move(row));
    }
    return out;
}

}  // namespace openph::mechanics
