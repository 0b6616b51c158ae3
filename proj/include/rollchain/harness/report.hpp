// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <rollchain/harness/config.hpp>

namespace rollchain::harness {

using Cell = std::variant<std::int64_t, std::uint64_t, double, std::string>;

//! A named result table. CSV files carry a header row; JSON files are an array
//! of objects keyed by column name.
struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

//! Six significant digits; NaN prints as "nan" and infinities as "inf"/"-inf".
std::string format_number(double value);

void write_csv(std::ostream& out, const Table& table);
void write_json(std::ostream& out, const Table& table);

//! Writes `<dir>/<name>_<tag>.csv|json` and returns the path.
std::filesystem::path emit_report(const Table& table, const std::filesystem::path& dir, const std::string& tag,
                                  OutputFormat format);

std::string file_name(const std::string& name, const std::string& tag, std::string_view extension);

}  // namespace rollchain::harness
