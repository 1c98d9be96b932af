#include "openph/io/csv.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string_view>
#include <system_error>

namespace openph::io {

namespace {

int significant_digits(std::string_view repr) {
    // Digits of the mantissa, leading zeros ignored (trailing zeros kept:
    // over-counting only forces the fixed-precision fallback, never a loss).
    int count = 0;
    bool leading = true;
    for (char c : repr) {
        if (c == 'e' || c == 'E') break;
        if (!std::isdigit(static_cast<unsigned char>(c))) continue;
        if (leading && c == '0') continue;
        leading = false;
        ++count;
    }
    return count;
}

std::string to_chars_string(double value, std::optional<int> precision) {
    char buf[64];
    const auto result = precision
                            ? std::to_chars(buf, buf + sizeof(buf), value,
                                            std::chars_format::general, *precision)
                            : std::to_chars(buf, buf + sizeof(buf), value);
    if (result.ec != std::errc{}) throw std::runtime_error("csv: number formatting failed");
    return std::string(buf, result.ptr);
}

}  // namespace

std::string format_csv_value(double value, int precision) {
    if (precision < 1 || precision > 17)
        throw std::invalid_argument("csv: precision must be in [1, 17]");
    if (!std::isfinite(value)) throw std::invalid_argument("csv: value must be finite");
    if (value == 0.0) return "0";

    std::string shortest = to_chars_string(value, std::nullopt);
    if (significant_digits(shortest) <= precision) return shortest;
    return to_chars_string(value, precision);
}

std::size_t write_csv(const numcore::TimeSeries& series, int precision, std::ostream& out) {
    std::string text;
    for (std::size_t j = 0; j < series.cols(); ++j) {
        if (j > 0) text += ',';
        text += series.labels()[j];
    }
    text += '\n';
    for (std::size_t i = 0; i < series.rows(); ++i) {
        for (std::size_t j = 0; j < series.cols(); ++j) {
            if (j > 0) text += ',';
            text += format_csv_value(series.at(i, j), precision);
        }
        text += '\n';
    }

    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw std::runtime_error("csv: write failed");
    return text.size();
}

}  // namespace openph::io
