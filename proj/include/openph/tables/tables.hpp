#pragma once

#include "openph/numcore/series.hpp"

namespace openph::tables {

struct TableSpec {
    double start;
    double stop;
    double step;
    int n_max;

    void validate_temperature() const;  // step > 0, stop >= start
    void validate_stirling() const;     // 1 <= n_max <= 170
};

/// Columns (celsius, fahrenheit); rows at start, start+step, ... <= stop.
numcore::TimeSeries fahrenheit_celsius_table(const TableSpec& spec);

/// Columns (n, factorial, stirling, relative_error) for n = 1..n_max.
/// factorial is the exact iterative product (double precision, so exact as an
/// integer up to n = 22 and correctly rounded beyond); stirling is
/// sqrt(2 pi n) (n/e)^n; relative_error = (factorial - stirling)/factorial.
numcore::TimeSeries stirling_table(int n_max);

}  // namespace openph::tables
