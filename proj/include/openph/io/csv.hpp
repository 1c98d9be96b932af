#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "openph/numcore/series.hpp"

namespace openph::io {

/// Shortest representation that round-trips to the same double, except that
/// values needing more than `precision` significant digits are rewritten with
/// exactly `precision` significant digits. Locale-independent, '.' decimal
/// separator. Zero prints as "0".
std::string format_csv_value(double value, int precision);

/// Header of comma-joined labels, then one LF-terminated row per sample with
/// no trailing delimiter. Returns bytes written.
std::size_t write_csv(const numcore::TimeSeries& series, int precision, std::ostream& out);

}  // namespace openph::io
