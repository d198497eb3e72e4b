#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "robinext/report.hpp"
#include "robinext/validate.hpp"

#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>
#include <vector>

using namespace robinext;

namespace {

// Deterministic pseudo-random doubles spanning many magnitudes.
std::vector<double> awkward_doubles() {
    std::vector<double> v{0.0,     -0.0,    1.0 / 3.0,       0.1,       -1e-300,
                          1e300,   3.141592653589793, -2.5e-13, 6.02214076e23, -252.0310095734400572971};
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    for (int i = 0; i < 40; ++i) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        const double mant = static_cast<double>(state >> 11) / 9007199254740992.0;
        const int expo = static_cast<int>(state % 613) - 306;
        v.push_back(std::ldexp(2.0 * mant - 1.0, expo));
    }
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else
            cur += c;
    }
    parts.push_back(cur);
    return parts;
}

} // namespace

TEST_CASE("format_double round-trips every finite value bit-exactly") {
    for (double v : awkward_doubles()) {
        const std::string text = report::format_double(v);
        const double back = std::strtod(text.c_str(), nullptr);
        CHECK(std::memcmp(&back, &v, sizeof v) == 0);
    }
}

TEST_CASE("CSV emit/parse reproduces the table bit-exactly") {
    const auto values = awkward_doubles();
    report::Table t;
    t.columns = {"a", "b", "c", "d", "e"};
    for (std::size_t i = 0; i + 5 <= values.size(); i += 5)
        t.rows.push_back({values[i], values[i + 1], values[i + 2], values[i + 3], values[i + 4]});

    std::istringstream in(report::to_csv(t));
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "a,b,c,d,e");
    for (const auto& row : t.rows) {
        REQUIRE(std::getline(in, line));
        const auto cells = split(line, ',');
        REQUIRE(cells.size() == row.size());
        for (std::size_t c = 0; c < row.size(); ++c) {
            const double back = std::strtod(cells[c].c_str(), nullptr);
            CHECK(std::memcmp(&back, &row[c], sizeof back) == 0);
        }
    }
    CHECK_FALSE(std::getline(in, line)); // nothing after the last row
}

TEST_CASE("JSON projection preserves column order and values") {
    report::Table t;
    t.columns = {"param", "lambda"};
    t.rows = {{-1.0, -0.3540806066586044}, {-2.0, -2.410725921657127}};
    const auto rows = report::table_to_json(t);
    REQUIRE(rows.is_array());
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].begin().key() == "param");
    CHECK(rows[0]["lambda"].get<double>() == -0.3540806066586044);
    // serialized JSON numbers parse back to the identical doubles
    const auto reparsed = report::Json::parse(rows.dump());
    CHECK(reparsed[1]["lambda"].get<double>() == -2.410725921657127);
}

TEST_CASE("mismatched row width is an internal error, not silent corruption") {
    report::Table t;
    t.columns = {"a", "b"};
    t.rows = {{1.0}};
    CHECK_THROWS_AS(report::to_csv(t), std::runtime_error);
    CHECK_THROWS_AS(report::table_to_json(t), std::runtime_error);
}

TEST_CASE("invariant suite enumerates at least 12 named checks with details") {
    const auto results = validate::run_all_checks();
    CHECK(results.size() >= 12);
    for (const auto& r : results) {
        CHECK_FALSE(r.name.empty());
        CHECK_FALSE(r.detail.empty());
        CHECK(r.passed); // fresh build: everything green
    }
}
