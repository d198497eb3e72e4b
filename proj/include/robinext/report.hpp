// Output formatting shared by the command-line tool: canonical JSON records
// and round-trip-exact CSV tables.
#pragma once

#include "json.hpp"

#include <string>
#include <vector>

namespace robinext::report {

using Json = nlohmann::ordered_json;

// Shortest representation that parses back to the identical bits (%.17g).
std::string format_double(double v);

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows; // each row has columns.size() entries
};

// Header line plus one line per row; numbers via format_double.
std::string to_csv(const Table& table);

// Array of one object per row, keys in column order.
Json table_to_json(const Table& table);

} // namespace robinext::report
