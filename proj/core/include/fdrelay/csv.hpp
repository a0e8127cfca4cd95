// SPDX-License-Identifier: Apache-2.0
//
// fdrelay — rate analysis for full-duplex massive MIMO AF relaying
// with low-resolution ADCs
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace fdrelay {

// Minimal comma-separated table with a header row. Locale-independent:
// '.' decimal separator, UTF-8, no quoting (cells never contain commas).
// format_cell emits 17 significant digits so parsing recovers the exact
// double; integer-valued cells may be written as plain integers. An empty
// cell marks a failed evaluation, "inf" an unbounded value.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;  // pre-formatted cells
};

std::string format_cell(double value);
std::string format_integer_cell(long long value);

void write_csv(const CsvTable& table, const std::string& path);

// Parsed numeric view: empty and non-numeric cells become nullopt, "inf"
// becomes +infinity.
struct ParsedCsv {
  std::vector<std::string> header;
  std::vector<std::vector<std::optional<double>>> values;
};
ParsedCsv read_csv(const std::string& path);

}  // namespace fdrelay
