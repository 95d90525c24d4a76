#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sumsets/oracle.hpp"

namespace sumsets {

enum class Format { Json, Csv, Text };
Format parse_format(const std::string& text);

struct Table {
    std::string origin;  // written as a leading "# origin:" line when nonempty
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& s);  // RFC 4180 quoting
// json: one object per row, integer cells as numbers, empty cells as null
std::string emit(Format f, const Table& t);
Table parse_csv(const std::string& text);

// One computed quantity.
struct ReportRow {
    QuantityQuery query;
    std::optional<long long> value;
    std::optional<std::vector<int>> witness;
    std::vector<std::string> citations;
    long long nodes = 0;
    std::optional<double> elapsed_ms;  // only with --timing, breaks byte identity
};
std::string row_to_json(const ReportRow& r);
ReportRow row_from_json(const std::string& line);
std::string point_to_json(const std::string& id, const GridPoint& p);

struct NamedTable {
    std::string id;
    std::string fixture;  // file name under fixtures/
    std::string axis;     // what --n ranges over
    std::vector<int> default_range;
    std::function<Table(const std::vector<int>&, const SearchOptions&)> build;
    // recomputes a fixture row lying outside what build can sweep; empty if none
    std::function<std::vector<std::string>(const std::vector<std::string>&, const SearchOptions&)> point;
};
const std::vector<NamedTable>& named_tables();
const NamedTable& find_table(const std::string& id);

struct FixtureResult {
    std::string id;
    bool ok = false;
    int rows = 0;           // rows compared
    int point_rows = 0;     // of which recomputed one by one
    std::string mismatch;   // first mismatching cell
};
FixtureResult check_fixture(const NamedTable& t, const std::string& fixture_dir, const SearchOptions& opt);
Table fixture_table(const std::vector<FixtureResult>& rs);

}  // namespace sumsets
