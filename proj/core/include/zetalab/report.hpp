#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace zetalab {

inline constexpr const char* kVersion = "1.0.0";

using Cell = std::variant<std::int64_t, double, std::string>;

/// Parameter manifest plus ordered output rows for one experiment run.
struct ExperimentReport {
    std::string name;
    /// Ordered key/value pairs; order is preserved in every output format.
    std::vector<std::pair<std::string, std::string>> manifest;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void set(const std::string& key, const std::string& value);
    void set(const std::string& key, double value);
    void set(const std::string& key, std::int64_t value);
};

/// 17 significant digits, '.' separator, no locale influence.
std::string format_double(double x);
std::string format_cell(const Cell& c);

/// Header row then one row per record, '\n' line endings.
void write_csv(const ExperimentReport& report, std::ostream& out);
/// {"experiment", "manifest", "columns", "rows": [{column: value}...]}.
void write_json(const ExperimentReport& report, std::ostream& out);
/// Manifest only, as a JSON object.
void write_manifest_json(const ExperimentReport& report, std::ostream& out);

/// Parses CSV written by write_csv back into text cells. Throws ParseError
/// naming the offending line when a row's width does not match the header.
struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};
CsvTable read_csv(std::istream& in);

} // namespace zetalab
