// SPDX-License-Identifier: Apache-2.0
//
// fdrelay — rate analysis for full-duplex massive MIMO AF relaying
// with low-resolution ADCs
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "fdrelay/presets.hpp"

#include <cmath>

#include "fdrelay/config_io.hpp"
#include "fdrelay/units.hpp"

namespace fdrelay {
namespace {

std::vector<double> db_range(double lo_db, double hi_db, double step_db) {
  std::vector<double> v;
  for (double d = lo_db; d <= hi_db + 1e-9; d += step_db) {
    v.push_back(from_db(d));
  }
  return v;
}

std::vector<double> int_range(int lo, int hi, int step) {
  std::vector<double> v;
  for (int m = lo; m <= hi; m += step) {
    v.push_back(m);
  }
  return v;
}

std::vector<Preset> build_presets() {
  std::vector<Preset> p;

  p.push_back({
      "fig3",
      "sum rate vs p_S; 2-bit ADCs everywhere, p_p = p_R = 10 dB, "
      "sigma_LI2 = 0 dB; exact/approx/Monte-Carlo overlay",
      R"({"M":64,"K":5,"p_S":"0dB","p_R":"10dB","p_p":"10dB","sigma_LI2":"0dB","relay_adc":2,"dest_adc":2})",
      "p_S",
      db_range(-10, 40, 5),
      {OutputKind::kExact, OutputKind::kApprox, OutputKind::kMc},
  });

  p.push_back({
      "fig4",
      "sum rate vs M with the infinite-array limit; 2-bit relay ADCs, "
      "destination depth per curve, p = 0 dB, sigma_LI2 = -10 dB",
      R"({"M":64,"K":5,"p_S":"0dB","p_R":"0dB","p_p":"0dB","sigma_LI2":"-10dB","relay_adc":2,"dest_adc":2})",
      "M",
      int_range(32, 512, 32),
      {OutputKind::kExact, OutputKind::kLimit},
  });

  p.push_back({
      "fig5",
      "sum rate vs M with quantization at the relay only; ideal destination "
      "ADCs, p = 0 dB, sigma_LI2 = -10 dB",
      R"({"M":64,"K":5,"p_S":"0dB","p_R":"0dB","p_p":"0dB","sigma_LI2":"-10dB","relay_adc":1,"dest_adc":"infinite"})",
      "M",
      int_range(25, 500, 25),
      {OutputKind::kExact},
  });

  p.push_back({
      "fig6",
      "full- vs half-duplex sum rate across the loop-interference level; "
      "2-bit ADCs, p = -10 dB",
      R"({"M":100,"K":5,"p_S":"-10dB","p_R":"-10dB","p_p":"-10dB","sigma_LI2":"0dB","relay_adc":2,"dest_adc":2})",
      "sigma_LI2",
      db_range(-10, 25, 2.5),
      {OutputKind::kApprox, OutputKind::kHalfDuplex},
  });

  p.push_back({
      "fig7",
      "sum rate vs relay power around the optimal allocation; one-bit relay "
      "ADCs, 2-bit destinations, p_S = p_p = -10 dB",
      R"({"M":64,"K":5,"p_S":"-10dB","p_R":"0dB","p_p":"-10dB","sigma_LI2":"-20dB","relay_adc":1,"dest_adc":2})",
      "p_R",
      db_range(-10, 20, 2.5),
      {OutputKind::kExact, OutputKind::kApprox},
  });

  Preset fig8{
      "fig8",
      "required source power vs antenna count for a 5 bit/s/Hz sum rate, "
      "relay power coupled as p_R = K*p_S; one-bit ADCs, p_p = 0 dB",
      R"({"M":200,"K":5,"p_S":"0dB","p_R":"0dB","p_p":"0dB","sigma_LI2":"-20dB","relay_adc":1,"dest_adc":1})",
      "M",
      int_range(50, 500, 50),
      {},
      true,
      5.0,
  };
  p.push_back(fig8);

  p.push_back({
      "fig9",
      "full- vs half-duplex sum rate across the antenna count at strong loop "
      "interference (sigma_LI2 = 16 dB); 2-bit ADCs, p = 0 dB",
      R"({"M":100,"K":5,"p_S":"0dB","p_R":"0dB","p_p":"0dB","sigma_LI2":"16dB","relay_adc":2,"dest_adc":2})",
      "M",
      int_range(25, 500, 25),
      {OutputKind::kApprox, OutputKind::kHalfDuplex},
  });

  return p;
}

SweepResult run_design_sweep(const Preset& preset, const SystemConfig& base,
                             const std::string& csv_path) {
  SweepResult result;
  CsvTable& t = result.table;
  t.header = {preset.axis, "required_p_S", "required_p_S_db"};
  for (double v : preset.values) {
    SystemConfig c = base;
    c.relay_antennas = static_cast<int>(v);
    std::vector<std::string> row(3);
    row[0] = format_integer_cell(static_cast<long long>(v));
    try {
      DesignQuery q;
      q.kind = DesignKind::kRequiredSourcePower;
      q.config = c;
      q.bracket = SearchBracket{1e-8, 1e6, 1e-6};
      q.target_sum_rate = preset.design_target;
      const DesignResult r = run_design(q);
      row[1] = format_cell(r.value);
      row[2] = format_cell(to_db(r.value));
    } catch (const std::exception& e) {
      result.notes.push_back(preset.axis + "=" + format_integer_cell(
                                 static_cast<long long>(v)) + ": " + e.what());
    }
    t.rows.push_back(std::move(row));
  }
  for (const auto& row : t.rows) {
    std::vector<std::optional<double>> vals;
    for (const auto& cell : row) {
      if (cell.empty()) {
        vals.emplace_back(std::nullopt);
      } else {
        vals.emplace_back(std::stod(cell));
      }
    }
    result.values.push_back(std::move(vals));
  }
  if (!csv_path.empty()) {
    write_csv(t, csv_path);
  }
  return result;
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = build_presets();
  return all;
}

const Preset* find_preset(const std::string& name) {
  for (const Preset& p : presets()) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

SweepResult run_preset(const Preset& preset, const std::vector<std::string>& overrides,
                       std::int64_t mc_n, std::uint64_t seed,
                       const std::string& csv_path) {
  std::string base_json = preset.base_json;
  for (const std::string& o : overrides) {
    apply_override(base_json, o);
  }
  const SystemConfig base = parse_config_text(base_json);

  if (preset.design_mode) {
    return run_design_sweep(preset, base, csv_path);
  }

  SweepSpec spec;
  spec.base = base;
  spec.axis = preset.axis;
  spec.values = preset.values;
  spec.outputs = preset.outputs;
  return run_sweep(spec, mc_n, seed, csv_path);
}

}  // namespace fdrelay
