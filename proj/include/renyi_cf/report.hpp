#pragma once

// Run reports: a config echo, named result tables and certificates, written
// as CSV ('#' comment header, one block per table) or as a single JSON object
// {config, schema, results, certificates}.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace renyi {

using Json = nlohmann::ordered_json;

std::string report_schema_version();

struct ResultTable {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Json>> rows;  // scalar cells: integer, float, string or bool
};

struct Report {
    Json config = Json::object();
    std::vector<ResultTable> tables;
    Json certificates = Json::object();

    ResultTable& table(const std::string& name, std::vector<std::string> columns);
    const ResultTable* find(std::string_view name) const;
};

std::string to_json(const Report& report);
std::string to_csv(const Report& report);

Report parse_json(std::string_view text);
Report parse_csv(std::string_view text);

// CSV numbers carry 15 significant digits.
std::string format_csv_number(double v);

}  // namespace renyi
