#pragma once

#include <vector>

#include "openph/numcore/series.hpp"

namespace openph::mechanics {

/// Fixed-fixed string vibrating in its n-th normal mode.
struct StringParams {
    double length;   // m
    double tension;  // N
    double mu;       // linear density, kg/m
    double y_m;      // antinode amplitude, m
    int n;           // mode number, >= 1

    void validate() const;
};

/// sqrt(tension / mu)
double wave_speed(double tension, double mu);

/// f_n = n v / (2 L)
double resonance_frequency(const StringParams& p);

/// Standing wave y(x, t) = y_m sin(n pi x / L) cos(2 pi f_n t) for x in [0, L].
double standing_wave(const StringParams& p, double x, double t);

/// Two counter-propagating waves, y_m sin(kx - wt) + y_m sin(kx + wt).
/// Evaluated literally term by term; equals 2 y_m sin(kx) cos(wt) up to
/// rounding.
double traveling_superposition(double y_m, double k_wave, double omega, double x, double t);

/// Interior and endpoint nodes: x = j L / n for j = 0..n.
std::vector<double> node_positions(const StringParams& p);

/// Snapshots over one period: columns t, y_0 .. y_{points-1} with y_j the
/// displacement at x_j = j L / (points - 1); frame i is at t = T i / (frames - 1).
/// frames = 1 emits the single t = 0 snapshot.
numcore::TimeSeries string_animation_frames(const StringParams& p, int frames, int points);

}  // namespace openph::mechanics
