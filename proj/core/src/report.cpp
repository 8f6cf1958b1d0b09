#include "zetalab/report.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "zetalab/errors.hpp"

namespace zetalab {

namespace {

std::vector<std::string> split_line(const std::string& line)
{
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ','))
        out.push_back(field);
    if (!line.empty() && line.back() == ',')
        out.emplace_back();
    return out;
}

nlohmann::ordered_json cell_json(const Cell& c)
{
    return std::visit([](const auto& v) { return nlohmann::ordered_json(v); }, c);
}

nlohmann::ordered_json manifest_json(const ExperimentReport& report)
{
    nlohmann::ordered_json m = nlohmann::ordered_json::object();
    for (const auto& [k, v] : report.manifest)
        m[k] = v;
    return m;
}

} // namespace

void ExperimentReport::set(const std::string& key, const std::string& value)
{
    for (auto& [k, v] : manifest) {
        if (k == key) {
            v = value;
            return;
        }
    }
    manifest.emplace_back(key, value);
}

void ExperimentReport::set(const std::string& key, double value) { set(key, format_double(value)); }

void ExperimentReport::set(const std::string& key, std::int64_t value) { set(key, std::to_string(value)); }

std::string format_double(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_cell(const Cell& c)
{
    if (const auto* d = std::get_if<double>(&c))
        return format_double(*d);
    if (const auto* i = std::get_if<std::int64_t>(&c))
        return std::to_string(*i);
    return std::get<std::string>(c);
}

void write_csv(const ExperimentReport& report, std::ostream& out)
{
    std::string buf;
    for (std::size_t i = 0; i < report.columns.size(); ++i) {
        if (i)
            buf += ',';
        buf += report.columns[i];
    }
    buf += '\n';
    for (const auto& row : report.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                buf += ',';
            buf += format_cell(row[i]);
        }
        buf += '\n';
    }
    out << buf;
    if (!out)
        throw Error(ErrorKind::Io, "failed writing CSV for " + report.name);
}

void write_json(const ExperimentReport& report, std::ostream& out)
{
    nlohmann::ordered_json doc;
    doc["experiment"] = report.name;
    doc["manifest"] = manifest_json(report);
    doc["columns"] = report.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size() && i < report.columns.size(); ++i)
            obj[report.columns[i]] = cell_json(row[i]);
        rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
    if (!out)
        throw Error(ErrorKind::Io, "failed writing JSON for " + report.name);
}

void write_manifest_json(const ExperimentReport& report, std::ostream& out)
{
    nlohmann::ordered_json doc;
    doc["experiment"] = report.name;
    doc["manifest"] = manifest_json(report);
    out << doc.dump(2) << '\n';
    if (!out)
        throw Error(ErrorKind::Io, "failed writing manifest for " + report.name);
}

CsvTable read_csv(std::istream& in)
{
    CsvTable table;
    std::string line;
    if (!std::getline(in, line))
        throw ParseError(1, "missing header");
    table.columns = split_line(line);
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        auto fields = split_line(line);
        if (fields.size() != table.columns.size())
            throw ParseError(lineno, "expected " + std::to_string(table.columns.size()) + " fields, got " +
                                         std::to_string(fields.size()));
        table.rows.push_back(std::move(fields));
    }
    return table;
}

} // namespace zetalab
