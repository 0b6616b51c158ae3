// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <rollchain/harness/report.hpp>

#include <cmath>
#include <fstream>

#include <fmt/format.h>

#include <rollchain/harness/errors.hpp>

namespace rollchain::harness {

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    return fmt::format("{:.6g}", value);
}

namespace {

    std::string csv_field(const Cell& cell) {
        return std::visit(
            [](const auto& v) -> std::string {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, double>) {
                    return format_number(v);
                } else if constexpr (std::is_same_v<T, std::string>) {
                    if (v.find_first_of(",\"\n") == std::string::npos) return v;
                    std::string quoted = "\"";
                    for (char c : v) {
                        if (c == '"') quoted += '"';
                        quoted += c;
                    }
                    return quoted + "\"";
                } else {
                    return std::to_string(v);
                }
            },
            cell);
    }

    nlohmann::ordered_json json_value(const Cell& cell) {
        return std::visit(
            [](const auto& v) -> nlohmann::ordered_json {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, double>) {
                    // Same rounding as the CSV; non-finite values have no JSON number.
                    if (!std::isfinite(v)) return nullptr;
                    return std::stod(format_number(v));
                } else {
                    return v;
                }
            },
            cell);
    }

}  // namespace

void write_csv(std::ostream& out, const Table& table) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
        out << '\n';
    }
}

void write_json(std::ostream& out, const Table& table) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
            obj[table.columns[i]] = json_value(row[i]);
        }
        rows.push_back(std::move(obj));
    }
    out << rows.dump(2) << '\n';
}

std::string file_name(const std::string& name, const std::string& tag, std::string_view extension) {
    return fmt::format("{}_{}.{}", name, tag, extension);
}

std::filesystem::path emit_report(const Table& table, const std::filesystem::path& dir, const std::string& tag,
                                  OutputFormat format) {
    const auto path = dir / file_name(table.name, tag, to_string(format));
    std::ofstream out(path, std::ios::binary);
    if (!out) throw HarnessError(HarnessErrc::kIoError, {fmt::format("cannot write {}", path.string())});
    if (format == OutputFormat::kCsv) {
        write_csv(out, table);
    } else {
        write_json(out, table);
    }
    if (!out) throw HarnessError(HarnessErrc::kIoError, {fmt::format("write failed: {}", path.string())});
    return path;
}

}  // namespace rollchain::harness
