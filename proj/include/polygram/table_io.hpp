#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bignum.hpp"
#include "table.hpp"

// CSV and JSON serialisation for count tables. Counts are emitted as decimal
// strings in both formats (JSON numbers would silently lose precision past
// 2^53), lines end with '\n', and notes ride along as '#'-prefixed footnote
// lines in CSV and as a "notes" array in JSON.
namespace polygram {

namespace detail {

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt parse_decimal(const std::string& s, const std::string& what) {
    if (s.empty()) throw std::invalid_argument(what + ": empty number");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i >= s.size()) throw std::invalid_argument(what + ": malformed number '" + s + "'");
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument(what + ": malformed number '" + s + "'");
    return BigInt(s);
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

}  // namespace detail

// Header "k,n=1,...,n=N"; one row per k; notes as trailing "# ..." lines.
inline std::string to_csv(const CountTable& t) {
    std::ostringstream out;
    out << "k";
    for (int n = 1; n <= t.max_n; ++n) out << ",n=" << n;
    out << "\n";
    for (int k = 1; k <= t.max_k; ++k) {
        out << k;
        for (int n = 1; n <= t.max_n; ++n) out << "," << detail::to_decimal(t.at(k, n));
        out << "\n";
    }
    for (const std::string& note : t.notes) out << "# " << note << "\n";
    return out.str();
}

// Header "k,n,m=1,...,m=M"; one row per (k, n) pair, n varying fastest.
inline std::string to_csv(const CountTable3& t) {
    std::ostringstream out;
    out << "k,n";
    for (int m = 1; m <= t.max_m; ++m) out << ",m=" << m;
    out << "\n";
    for (int k = 1; k <= t.max_k; ++k)
        for (int n = 1; n <= t.max_n; ++n) {
            out << k << "," << n;
            for (int m = 1; m <= t.max_m; ++m) out << "," << detail::to_decimal(t.at(k, n, m));
            out << "\n";
        }
    for (const std::string& note : t.notes) out << "# " << note << "\n";
    return out.str();
}

inline CountTable parse_csv_table(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("csv table: empty input");
    std::vector<std::string> header = detail::split_csv_line(line);
    if (header.size() < 2 || header[0] != "k" || header[1].rfind("n=", 0) != 0)
        throw std::invalid_argument("csv table: expected header 'k,n=1,...'");
    const int max_n = static_cast<int>(header.size()) - 1;
    std::vector<std::vector<BigInt>> rows;
    std::vector<std::string> notes;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::size_t start = line.find_first_not_of(" ", 1);
            notes.push_back(start == std::string::npos ? "" : line.substr(start));
            continue;
        }
        std::vector<std::string> fields = detail::split_csv_line(line);
        if (static_cast<int>(fields.size()) != max_n + 1)
            throw std::invalid_argument("csv table: row has " + std::to_string(fields.size()) +
                                        " fields, expected " + std::to_string(max_n + 1));
        if (fields[0] != std::to_string(rows.size() + 1))
            throw std::invalid_argument("csv table: unexpected row label '" + fields[0] + "'");
        std::vector<BigInt> row;
        row.reserve(static_cast<std::size_t>(max_n));
        for (int n = 1; n <= max_n; ++n)
            row.push_back(detail::parse_decimal(fields[static_cast<std::size_t>(n)], "csv table"));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("csv table: no data rows");
    CountTable t("", static_cast<int>(rows.size()), max_n);
    t.cells = std::move(rows);
    t.notes = std::move(notes);
    return t;
}

inline CountTable3 parse_csv_table3(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("csv table3: empty input");
    std::vector<std::string> header = detail::split_csv_line(line);
    if (header.size() < 3 || header[0] != "k" || header[1] != "n" || header[2].rfind("m=", 0) != 0)
        throw std::invalid_argument("csv table3: expected header 'k,n,m=1,...'");
    const int max_m = static_cast<int>(header.size()) - 2;
    struct Row {
        int k, n;
        std::vector<BigInt> values;
    };
    std::vector<Row> rows;
    std::vector<std::string> notes;
    int max_k = 0, max_n = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::size_t start = line.find_first_not_of(" ", 1);
            notes.push_back(start == std::string::npos ? "" : line.substr(start));
            continue;
        }
        std::vector<std::string> fields = detail::split_csv_line(line);
        if (static_cast<int>(fields.size()) != max_m + 2)
            throw std::invalid_argument("csv table3: row has " + std::to_string(fields.size()) +
                                        " fields, expected " + std::to_string(max_m + 2));
        Row r;
        r.k = std::stoi(fields[0]);
        r.n = std::stoi(fields[1]);
        for (int m = 1; m <= max_m; ++m)
            r.values.push_back(detail::parse_decimal(fields[static_cast<std::size_t>(m) + 1], "csv table3"));
        max_k = std::max(max_k, r.k);
        max_n = std::max(max_n, r.n);
        rows.push_back(std::move(r));
    }
    if (rows.empty()) throw std::invalid_argument("csv table3: no data rows");
    CountTable3 t("", max_k, max_n, max_m);
    for (const Row& r : rows)
        for (int m = 1; m <= max_m; ++m) t.at(r.k, r.n, m) = r.values[static_cast<std::size_t>(m) - 1];
    t.notes = std::move(notes);
    return t;
}

// {"table": name, "params": {...}, "entries": [[...]], "notes": [...]} with
// every count a decimal string.
inline nlohmann::ordered_json to_json(const CountTable& t, const nlohmann::ordered_json& params) {
    nlohmann::ordered_json j;
    j["table"] = t.name;
    j["params"] = params;
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (int k = 1; k <= t.max_k; ++k) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int n = 1; n <= t.max_n; ++n) row.push_back(detail::to_decimal(t.at(k, n)));
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    j["notes"] = t.notes;
    return j;
}

inline nlohmann::ordered_json to_json(const CountTable3& t, const nlohmann::ordered_json& params) {
    nlohmann::ordered_json j;
    j["table"] = t.name;
    j["params"] = params;
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (int k = 1; k <= t.max_k; ++k) {
        nlohmann::ordered_json plane = nlohmann::ordered_json::array();
        for (int n = 1; n <= t.max_n; ++n) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (int m = 1; m <= t.max_m; ++m) row.push_back(detail::to_decimal(t.at(k, n, m)));
            plane.push_back(std::move(row));
        }
        entries.push_back(std::move(plane));
    }
    j["entries"] = std::move(entries);
    j["notes"] = t.notes;
    return j;
}

inline CountTable parse_json_table(const nlohmann::json& j) {
    if (!j.contains("entries") || !j["entries"].is_array() || j["entries"].empty())
        throw std::invalid_argument("json table: missing entries");
    const auto& entries = j["entries"];
    const int max_k = static_cast<int>(entries.size());
    const int max_n = static_cast<int>(entries[0].size());
    CountTable t(j.value("table", ""), max_k, max_n);
    for (int k = 1; k <= max_k; ++k) {
        const auto& row = entries[static_cast<std::size_t>(k) - 1];
        if (static_cast<int>(row.size()) != max_n)
            throw std::invalid_argument("json table: ragged entries");
        for (int n = 1; n <= max_n; ++n)
            t.at(k, n) = detail::parse_decimal(row[static_cast<std::size_t>(n) - 1].get<std::string>(),
                                               "json table");
    }
    if (j.contains("notes"))
        for (const auto& note : j["notes"]) t.notes.push_back(note.get<std::string>());
    return t;
}

inline CountTable3 parse_json_table3(const nlohmann::json& j) {
    if (!j.contains("entries") || !j["entries"].is_array() || j["entries"].empty())
        throw std::invalid_argument("json table3: missing entries");
    const auto& entries = j["entries"];
    const int max_k = static_cast<int>(entries.size());
    const int max_n = static_cast<int>(entries[0].size());
    const int max_m = static_cast<int>(entries[0][0].size());
    CountTable3 t(j.value("table", ""), max_k, max_n, max_m);
    for (int k = 1; k <= max_k; ++k)
        for (int n = 1; n <= max_n; ++n) {
            const auto& row = entries[static_cast<std::size_t>(k) - 1][static_cast<std::size_t>(n) - 1];
            if (static_cast<int>(row.size()) != max_m)
                throw std::invalid_argument("json table3: ragged entries");
            for (int m = 1; m <= max_m; ++m)
                t.at(k, n, m) = detail::parse_decimal(
                    row[static_cast<std::size_t>(m) - 1].get<std::string>(), "json table3");
        }
    if (j.contains("notes"))
        for (const auto& note : j["notes"]) t.notes.push_back(note.get<std::string>());
    return t;
}

}  // namespace polygram
