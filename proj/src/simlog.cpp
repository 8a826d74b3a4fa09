#include "simlog.hpp"

#include <fstream>

#include "errors.hpp"

namespace perchkit {

void SimLog::append(std::vector<double> row) {
    if (row.size() != columns_.size())
        throw ArgumentError("log row width does not match column count");
    data_.push_back(std::move(row));
}

std::size_t SimLog::column(const std::string& name) const {
    for (std::size_t i = 0; i < columns_.size(); ++i)
        if (columns_[i] == name) return i;
    throw ArgumentError("no such log column: " + name);
}

bool SimLog::has_column(const std::string& name) const {
    for (const auto& c : columns_)
        if (c == name) return true;
    return false;
}

std::vector<double> SimLog::series(const std::string& name) const {
    const std::size_t idx = column(name);
    std::vector<double> out;
    out.reserve(data_.size());
    for (const auto& r : data_) out.push_back(r[idx]);
    return out;
}

void SimLog::write_csv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw ArgumentError("cannot open file for writing: " + path);
    for (std::size_t i = 0; i < columns_.size(); ++i)
        out << columns_[i] << (i + 1 < columns_.size() ? ',' : '\n');
    out.precision(15);
    for (const auto& r : data_)
        for (std::size_t i = 0; i < r.size(); ++i) out << r[i] << (i + 1 < r.size() ? ',' : '\n');
}

}  // namespace perchkit
