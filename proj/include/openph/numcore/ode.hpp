#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "openph/numcore/series.hpp"

namespace openph::numcore {

/// Right-hand side of y' = f(t, y). Writes dy/dt into dydt (same length as y).
using VectorField =
    std::function<void(double t, std::span<const double> y, std::span<double> dydt)>;

/// Thrown when an integration step produces a non-finite value.
class IntegrationDiverged : public std::runtime_error {
  public:
    explicit IntegrationDiverged(double t);
    double t() const { return t_; }

  private:
    double t_;
};

/// One classical 4th-order Runge-Kutta step from (t, y) to t + dt.
std::vector<double> rk4_step(const VectorField& f, double t, std::span<const double> y,
                             double dt);

/// Fixed-step RK4 integration: steps+1 rows, row i at t0 + i*dt, first row
/// (t0, y0). Column labels are "t" followed by state_labels (defaults y0, y1, ...).
TimeSeries integrate_fixed(const VectorField& f, double t0, std::span<const double> y0,
                           double dt, long steps,
                           std::vector<std::string> state_labels = {});

/// Number of whole steps of size dt that fit into [0, t_max], robust to the
/// quotient landing an ulp below an integer. At least 1 when t_max >= dt.
long fixed_step_count(double t_max, double dt);

}  // namespace openph::numcore
