// SPDX-License-Identifier: Apache-2.0
//
// fdrelay — rate analysis for full-duplex massive MIMO AF relaying
// with low-resolution ADCs
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Batch front end. Subcommands:
//   sweep     one-axis parameter sweep -> CSV
//   validate  closed forms vs the Monte-Carlo oracle, z-score table
//   design    power-allocation / inverse-design queries
//   preset    named experiments fig3..fig9
// Exit status: 0 success, 1 evaluation/statistical failure, 2 usage or
// config error.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fdrelay/config_io.hpp"
#include "fdrelay/experiment.hpp"
#include "fdrelay/presets.hpp"
#include "fdrelay/units.hpp"

namespace {

using namespace fdrelay;

constexpr int kExitOk = 0;
constexpr int kExitEvaluation = 1;
constexpr int kExitUsage = 2;

double parse_axis_value(const std::string& token) {
  std::string t = token;
  bool db = false;
  if (t.size() > 2) {
    std::string tail = t.substr(t.size() - 2);
    for (auto& ch : tail) ch = static_cast<char>(std::tolower(ch));
    if (tail == "db") {
      db = true;
      t = t.substr(0, t.size() - 2);
      while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) {
        t.pop_back();
      }
    }
  }
  std::size_t used = 0;
  const double v = std::stod(t, &used);
  if (used != t.size()) {
    throw ConfigError("bad axis value '" + token + "'");
  }
  return db ? from_db(v) : v;
}

std::vector<double> parse_values(const std::string& csv) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const auto comma = csv.find(',', start);
    const std::string token =
        csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (token.empty()) {
      throw ConfigError("empty entry in --values");
    }
    out.push_back(parse_axis_value(token));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::set<OutputKind> parse_outputs(const std::string& csv) {
  std::set<OutputKind> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const auto comma = csv.find(',', start);
    const std::string token =
        csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!token.empty()) {
      out.insert(output_kind_from_string(token));
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) {
    throw ConfigError("no output kinds given");
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"achievable-rate analysis for quantized full-duplex massive MIMO relaying"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::int64_t mc_n = 10000;
  std::uint64_t seed = 1;

  // sweep
  auto* sweep = app.add_subcommand("sweep", "evaluate rates along one parameter axis");
  std::string axis, values_arg, outputs_arg = "exact,approx";
  sweep->add_option("--config", config_path, "scenario JSON file")->required();
  sweep->add_option("--axis", axis, "M|K|p_S|p_R|p_p|sigma_LI2|relay_bits|dest_bits")
      ->required();
  sweep->add_option("--values", values_arg,
                    "comma-separated axis values; powers accept a dB suffix")
      ->required();
  sweep->add_option("--outputs", outputs_arg, "exact,approx,mc,limit,half_duplex");
  sweep->add_option("--mc-n", mc_n, "Monte-Carlo realizations per point");
  sweep->add_option("--seed", seed, "master seed for the Monte-Carlo oracle");
  sweep->add_option("--out", out_path, "CSV output path");

  // validate
  auto* validate = app.add_subcommand("validate",
                                      "closed forms vs Monte-Carlo, term by term");
  validate->add_option("--config", config_path, "scenario JSON file")->required();
  validate->add_option("--mc-n", mc_n, "Monte-Carlo realizations (>= 1000)");
  validate->add_option("--seed", seed, "master seed");
  validate->add_option("--out", out_path, "optional CSV for the comparison table");

  // design
  auto* design = app.add_subcommand("design", "power-allocation and sizing queries");
  std::string query;
  double bracket_lo = 1e-4, bracket_hi = 1e4, tol = 1e-4;
  double target = 0.0, coupling_factor = -1.0;
  int max_antennas = 1 << 16;
  design->add_option("query", query,
                     "optimal-relay-power | optimize-relay-power | "
                     "crossover-loop-interference | crossover-antennas | "
                     "required-source-power | required-antennas")
      ->required();
  design->add_option("--config", config_path, "scenario JSON file")->required();
  design->add_option("--bracket-lo", bracket_lo, "search bracket lower edge");
  design->add_option("--bracket-hi", bracket_hi, "search bracket upper edge");
  design->add_option("--tol", tol, "relative search tolerance");
  design->add_option("--target", target, "target sum rate in bits/s/Hz");
  design->add_option("--coupling-factor", coupling_factor,
                     "p_R = factor * p_S for required-source-power (default K)");
  design->add_option("--max-antennas", max_antennas, "cap for required-antennas");
  design->add_option("--out", out_path, "CSV to append the result to");

  // preset
  auto* preset_cmd = app.add_subcommand("preset", "run a named experiment (fig3..fig9)");
  std::string preset_name;
  std::vector<std::string> overrides;
  std::string preset_values, preset_outputs;
  preset_cmd->add_option("name", preset_name, "fig3..fig9")->required();
  preset_cmd->add_option("--set", overrides,
                         "override a config field, e.g. --set M=128 --set relay_adc=1");
  preset_cmd->add_option("--values", preset_values, "replace the axis values");
  preset_cmd->add_option("--outputs", preset_outputs, "replace the output kinds");
  preset_cmd->add_option("--mc-n", mc_n, "Monte-Carlo realizations per point");
  preset_cmd->add_option("--seed", seed, "master seed");
  preset_cmd->add_option("--out", out_path, "CSV output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (sweep->parsed()) {
      SweepSpec spec;
      spec.base = parse_config(config_path);
      spec.axis = axis;
      spec.values = parse_values(values_arg);
      spec.outputs = parse_outputs(outputs_arg);
      const SweepResult res = run_sweep(spec, mc_n, seed, out_path);
      for (const auto& note : res.notes) {
        std::cerr << "note: " << note << '\n';
      }
      if (out_path.empty()) {
        // no file requested: emit the table on stdout
        for (std::size_t i = 0; i < res.table.header.size(); ++i) {
          std::cout << (i ? "," : "") << res.table.header[i];
        }
        std::cout << '\n';
        for (const auto& row : res.table.rows) {
          for (std::size_t i = 0; i < row.size(); ++i) {
            std::cout << (i ? "," : "") << row[i];
          }
          std::cout << '\n';
        }
      } else {
        std::cout << "wrote " << out_path << " (" << res.table.rows.size()
                  << " rows)\n";
      }
      return kExitOk;
    }

    if (validate->parsed()) {
      const SystemConfig config = parse_config(config_path);
      const ValidationReport rep = run_validation(config, mc_n, seed);
      std::cout << rep.text();
      if (!out_path.empty()) {
        CsvTable t;
        t.header = {"term", "user", "closed_form", "mc_mean", "mc_se", "z"};
        for (const auto& r : rep.rows) {
          t.rows.push_back({r.term, std::to_string(r.user), format_cell(r.closed_form),
                            format_cell(r.mc_mean), format_cell(r.mc_se),
                            format_cell(r.z)});
        }
        write_csv(t, out_path);
      }
      return rep.pass ? kExitOk : kExitEvaluation;
    }

    if (design->parsed()) {
      DesignQuery q;
      q.kind = design_kind_from_string(query);
      q.config = parse_config(config_path);
      q.bracket = SearchBracket{bracket_lo, bracket_hi, tol};
      q.target_sum_rate = target;
      q.max_antennas = max_antennas;
      if (coupling_factor > 0.0) {
        q.coupling_factor = coupling_factor;
      }
      const DesignResult res = run_design(q);
      std::cout << res.text() << '\n';
      if (!out_path.empty()) {
        append_design_csv(res, out_path);
      }
      return kExitOk;
    }

    if (preset_cmd->parsed()) {
      const Preset* p = find_preset(preset_name);
      if (p == nullptr) {
        std::cerr << "error: unknown preset '" << preset_name << "'\n";
        return kExitUsage;
      }
      Preset chosen = *p;
      if (!preset_values.empty()) {
        chosen.values = parse_values(preset_values);
      }
      if (!preset_outputs.empty()) {
        chosen.outputs = parse_outputs(preset_outputs);
      }
      const SweepResult res = run_preset(chosen, overrides, mc_n, seed, out_path);
      for (const auto& note : res.notes) {
        std::cerr << "note: " << note << '\n';
      }
      if (out_path.empty()) {
        for (std::size_t i = 0; i < res.table.header.size(); ++i) {
          std::cout << (i ? "," : "") << res.table.header[i];
        }
        std::cout << '\n';
        for (const auto& row : res.table.rows) {
          for (std::size_t i = 0; i < row.size(); ++i) {
            std::cout << (i ? "," : "") << row[i];
          }
          std::cout << '\n';
        }
      } else {
        std::cout << "wrote " << out_path << " (" << res.table.rows.size()
                  << " rows)\n";
      }
      return kExitOk;
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const EvaluationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitEvaluation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitEvaluation;
  }
  return kExitUsage;
}
