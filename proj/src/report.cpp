#include "renyi_cf/report.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace renyi {

std::string report_schema_version() { return "1.0.0"; }

ResultTable& Report::table(const std::string& name, std::vector<std::string> columns) {
    tables.push_back({name, std::move(columns), {}});
    return tables.back();
}

const ResultTable* Report::find(std::string_view name) const {
    for (const auto& t : tables) {
        if (t.name == name) return &t;
    }
    return nullptr;
}

std::string format_csv_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_cell(const Json& v) {
    if (v.is_string()) return quote(v.get<std::string>());
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_integer()) return v.dump();
    if (v.is_number_float()) return format_csv_number(v.get<double>());
    if (v.is_null()) return "";
    return quote(v.dump());
}

Json parse_cell(const std::string& tok, bool quoted) {
    if (quoted) return tok;
    if (tok.empty()) return nullptr;
    if (tok == "true") return true;
    if (tok == "false") return false;
    std::int64_t i = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), i);
    if (ec == std::errc() && p == tok.data() + tok.size()) return i;
    char* end = nullptr;
    const double d = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() + tok.size()) return d;
    return tok;
}

std::vector<std::pair<std::string, bool>> split_csv(std::string_view line) {
    std::vector<std::pair<std::string, bool>> cells;
    std::size_t k = 0;
    while (true) {
        std::string cell;
        bool quoted = false;
        if (k < line.size() && line[k] == '"') {
            quoted = true;
            ++k;
            while (k < line.size()) {
                if (line[k] == '"') {
                    if (k + 1 < line.size() && line[k + 1] == '"') {
                        cell += '"';
                        k += 2;
                        continue;
                    }
                    ++k;
                    break;
                }
                cell += line[k++];
            }
        }
        while (k < line.size() && line[k] != ',') cell += line[k++];
        cells.emplace_back(std::move(cell), quoted);
        if (k >= line.size()) break;
        ++k;
    }
    return cells;
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

}  // namespace

std::string to_json(const Report& report) {
    Json out = Json::object();
    out["config"] = report.config;
    out["schema"] = report_schema_version();
    Json results = Json::object();
    for (const auto& t : report.tables) {
        Json rows = Json::array();
        for (const auto& r : t.rows) {
            Json obj = Json::object();
            for (std::size_t c = 0; c < t.columns.size(); ++c) obj[t.columns[c]] = c < r.size() ? r[c] : Json();
            rows.push_back(std::move(obj));
        }
        results[t.name] = std::move(rows);
    }
    out["results"] = std::move(results);
    out["certificates"] = report.certificates;
    return out.dump(2) + "\n";
}

std::string to_csv(const Report& report) {
    std::ostringstream os;
    os << "# schema: " << report_schema_version() << "\n";
    os << "# config: " << report.config.dump() << "\n";
    os << "# certificates: " << report.certificates.dump() << "\n";
    for (const auto& t : report.tables) {
        os << "# table: " << t.name << "\n";
        for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << t.columns[c];
        os << "\n";
        for (const auto& r : t.rows) {
            for (std::size_t c = 0; c < r.size(); ++c) os << (c ? "," : "") << csv_cell(r[c]);
            os << "\n";
        }
    }
    return os.str();
}

Report parse_json(std::string_view text) {
    const Json in = Json::parse(text);
    if (!in.contains("schema") || !in.contains("results")) {
        throw std::invalid_argument("parse_json: missing schema or results");
    }
    Report r;
    r.config = in.value("config", Json::object());
    r.certificates = in.value("certificates", Json::object());
    for (const auto& [name, rows] : in["results"].items()) {
        ResultTable t{name, {}, {}};
        for (const auto& row : rows) {
            if (t.columns.empty()) {
                for (const auto& [k, v] : row.items()) t.columns.push_back(k);
            }
            std::vector<Json> cells;
            for (const auto& c : t.columns) cells.push_back(row.at(c));
            t.rows.push_back(std::move(cells));
        }
        r.tables.push_back(std::move(t));
    }
    return r;
}

Report parse_csv(std::string_view text) {
    Report r;
    bool saw_schema = false;
    bool want_header = false;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        if (line.empty()) continue;
        if (starts_with(line, "# schema: ")) {
            saw_schema = true;
        } else if (starts_with(line, "# config: ")) {
            r.config = Json::parse(line.substr(10));
        } else if (starts_with(line, "# certificates: ")) {
            r.certificates = Json::parse(line.substr(16));
        } else if (starts_with(line, "# table: ")) {
            r.tables.push_back({std::string(line.substr(9)), {}, {}});
            want_header = true;
        } else if (line[0] == '#') {
            continue;
        } else {
            if (r.tables.empty()) throw std::invalid_argument("parse_csv: data row before any table header");
            auto cells = split_csv(line);
            ResultTable& t = r.tables.back();
            if (want_header) {
                for (auto& [c, q] : cells) t.columns.push_back(c);
                want_header = false;
            } else {
                std::vector<Json> row;
                for (auto& [c, q] : cells) row.push_back(parse_cell(c, q));
                t.rows.push_back(std::move(row));
            }
        }
    }
    if (!saw_schema) throw std::invalid_argument("parse_csv: missing schema comment");
    return r;
}

}  // namespace renyi
