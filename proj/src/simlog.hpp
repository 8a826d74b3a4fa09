#pragma once

#include <string>
#include <vector>

namespace perchkit {

// Column-named time series. Rows are appended in simulation order; the CSV
// layout is the external contract (fixed open-loop header, controller columns
// appended for closed-loop runs).
class SimLog {
public:
    SimLog() = default;
    explicit SimLog(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    const std::vector<std::string>& columns() const { return columns_; }
    std::size_t rows() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    void append(std::vector<double> row);
    const std::vector<double>& row(std::size_t i) const { return data_[i]; }
    const std::vector<double>& back() const { return data_.back(); }

    // Index of a named column; throws ArgumentError if absent.
    std::size_t column(const std::string& name) const;
    bool has_column(const std::string& name) const;

    // Full column as a vector.
    std::vector<double> series(const std::string& name) const;

    void write_csv(const std::string& path) const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<double>> data_;
};

}  // namespace perchkit
