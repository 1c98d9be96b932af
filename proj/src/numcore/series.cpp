#include "openph/numcore/series.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace openph::numcore {

TimeSeries::TimeSeries(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw std::invalid_argument("TimeSeries: need at least one column");
}

void TimeSeries::append(std::vector<double> row) {
    if (row.size() != labels_.size())
        throw std::invalid_argument("TimeSeries: row arity does not match labels");
    for (double v : row)
        if (!std::isfinite(v)) throw std::invalid_argument("TimeSeries: non-finite value");
    if (!rows_.empty() && !(row.front() > rows_.back().front()))
        throw std::invalid_argument("TimeSeries: first column must be strictly increasing");
    rows_.push_back(std::move(row));
}

std::vector<double> TimeSeries::column(std::size_t j) const {
    std::vector<double> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r.at(j));
    return out;
}

std::size_t TimeSeries::column_index(const std::string& label) const {
    for (std::size_t j = 0; j < labels_.size(); ++j)
        if (labels_[j] == label) return j;
    throw std::invalid_argument("TimeSeries: no column named " + label);
}

}  // namespace openph::numcore
