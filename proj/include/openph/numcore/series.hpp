#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace openph::numcore {

/// Column-labelled table of samples. The first column is the independent
/// variable (time for simulations) and must be strictly increasing; every
/// row has one value per label and all values are finite.
class TimeSeries {
  public:
    explicit TimeSeries(std::vector<std::string> labels);

    void append(std::vector<double> row);

    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return labels_.size(); }
    const std::vector<double>& row(std::size_t i) const { return rows_.at(i); }
    double at(std::size_t i, std::size_t j) const { return rows_.at(i).at(j); }

    std::vector<double> column(std::size_t j) const;
    std::size_t column_index(const std::string& label) const;

  private:
    std::vector<std::string> labels_;
    std::vector<std::vector<double>> rows_;
};

}  // namespace openph::numcore
