#pragma once

#include <cmath>
#include <stdexcept>

namespace openph::numcore {

// Uniform 1D grid on [x_min, x_max] with n points, spacing dx = (x_max - x_min)/(n - 1).
class Grid1D {
  public:
    Grid1D(double x_min, double x_max, int n) : x_min_(x_min), x_max_(x_max), n_(n) {
        if (!std::isfinite(x_min) || !std::isfinite(x_max))
            throw std::invalid_argument("Grid1D: bounds must be finite");
        if (!(x_max > x_min)) throw std::invalid_argument("Grid1D: x_max must exceed x_min");
        if (n < 3) throw std::invalid_argument("Grid1D: need at least 3 points");
    }

    double x_min() const { return x_min_; }
    double x_max() const { return x_max_; }
    int n() const { return n_; }
    double dx() const { return (x_max_ - x_min_) / (n_ - 1); }

    // Endpoints are reproduced exactly; interior points equal x_min + i*dx up to rounding.
    double point(int i) const {
        const double s = static_cast<double>(i) / (n_ - 1);
        return x_min_ * (1.0 - s) + x_max_ * s;
    }

  private:
    double x_min_;
    double x_max_;
    int n_;
};

}  // namespace openph::numcore
