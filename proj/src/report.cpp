#include "robinext/report.hpp"

#include <cstdio>
#include <stdexcept>

namespace robinext::report {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string to_csv(const Table& table) {
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c)
            out += ',';
        out += table.columns[c];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size())
            throw std::runtime_error("csv row width does not match header");
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c)
                out += ',';
            out += format_double(row[c]);
        }
        out += '\n';
    }
    return out;
}

Json table_to_json(const Table& table) {
    Json rows = Json::array();
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size())
            throw std::runtime_error("json row width does not match header");
        Json obj = Json::object();
        for (std::size_t c = 0; c < row.size(); ++c)
            obj[table.columns[c]] = row[c];
        rows.push_back(std::move(obj));
    }
    return rows;
}

} // namespace robinext::report
