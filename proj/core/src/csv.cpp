// SPDX-License-Identifier: Apache-2.0
//
// fdrelay — rate analysis for full-duplex massive MIMO AF relaying
// with low-resolution ADCs
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "fdrelay/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace fdrelay {

std::string format_cell(double value) {
  if (std::isinf(value)) {
    return value > 0 ? "inf" : "-inf";
  }
  char buf[48];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::scientific, 16);
  return std::string(buf, res.ptr);
}

std::string format_integer_cell(long long value) { return std::to_string(value); }

void write_csv(const CsvTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("write_csv: cannot open " + path);
  }
  auto write_row = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  write_row(table.header);
  for (const auto& row : table.rows) {
    if (row.size() != table.header.size()) {
      throw std::runtime_error("write_csv: row width differs from header");
    }
    write_row(row);
  }
  if (!out) {
    throw std::runtime_error("write_csv: write failed for " + path);
  }
}

ParsedCsv read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("read_csv: cannot open " + path);
  }
  ParsedCsv parsed;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() && in.eof()) break;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      cells.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
      cells.emplace_back();
    }
    if (first) {
      parsed.header = cells;
      first = false;
      continue;
    }
    std::vector<std::optional<double>> row;
    row.reserve(cells.size());
    for (const auto& c : cells) {
      if (c.empty()) {
        row.emplace_back(std::nullopt);
      } else if (c == "inf") {
        row.emplace_back(std::numeric_limits<double>::infinity());
      } else if (c == "-inf") {
        row.emplace_back(-std::numeric_limits<double>::infinity());
      } else {
        double v = 0.0;
        const auto res = std::from_chars(c.data(), c.data() + c.size(), v);
        if (res.ec != std::errc{} || res.ptr != c.data() + c.size()) {
          row.emplace_back(std::nullopt);  // non-numeric cell
        } else {
          row.emplace_back(v);
        }
      }
    }
    parsed.values.push_back(std::move(row));
  }
  return parsed;
}

}  // namespace fdrelay
