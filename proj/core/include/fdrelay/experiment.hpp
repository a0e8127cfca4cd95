// SPDX-License-Identifier: Apache-2.0
//
// fdrelay — rate analysis for full-duplex massive MIMO AF relaying
// with low-resolution ADCs
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fdrelay/csv.hpp"
#include "fdrelay/design.hpp"
#include "fdrelay/mc_oracle.hpp"
#include "fdrelay/system_config.hpp"

namespace fdrelay {

// Raised when an evaluation (as opposed to malformed input) fails. CLI maps
// it to exit status 1.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputKind { kExact, kApprox, kMc, kLimit, kHalfDuplex };
std::string to_string(OutputKind kind);
OutputKind output_kind_from_string(const std::string& name);

// One-axis parameter sweep over a base scenario. Axis names: M, K, p_S,
// p_R, p_p, sigma_LI2, relay_bits, dest_bits. Values are linear (not dB)
// and must be strictly monotone; integer axes take integral values.
// Sweeping K requires homogeneous large-scale gains and tau_p == K in the
// base, both of which track K across the sweep.
struct SweepSpec {
  SystemConfig base;
  std::string axis;
  std::vector<double> values;
  std::set<OutputKind> outputs;

  void validate() const;
  SystemConfig config_at(double value) const;
};

// Column order: axis, then one sum-rate column per requested kind, then
// per-user rate columns per kind, then Monte-Carlo standard errors. A row
// whose evaluation fails for some kind gets empty cells for that kind (the
// note records why); an unbounded limit renders as "inf".
struct SweepResult {
  CsvTable table;
  std::vector<std::vector<std::optional<double>>> values;  // parsed mirror
  std::vector<std::string> notes;
};

SweepResult run_sweep(const SweepSpec& spec, std::int64_t mc_n, std::uint64_t seed,
                      const std::string& csv_path = "");

// Term-by-term comparison of the closed forms against the Monte-Carlo
// oracle. A row passes when its z-score is within 3; rows with zero spread
// pass only on exact agreement.
struct ValidationRow {
  std::string term;
  int user;  // -1 for the shared amplification-constraint norms
  double closed_form = 0.0;
  double mc_mean = 0.0;
  double mc_se = 0.0;
  double z = 0.0;
};
struct ValidationReport {
  std::vector<ValidationRow> rows;
  double max_abs_z = 0.0;
  bool pass = false;
  std::string text() const;
};
double validation_zscore(double closed_form, double mc_mean, double mc_se);
ValidationReport run_validation(const SystemConfig& config, std::int64_t mc_n,
                                std::uint64_t seed);

enum class DesignKind {
  kOptimalRelayPower,       // homogeneous closed form
  kOptimizeRelayPower,      // golden-section search
  kCrossoverLoopInterference,
  kCrossoverAntennas,
  kRequiredSourcePower,
  kRequiredAntennas,
};
std::string to_string(DesignKind kind);
DesignKind design_kind_from_string(const std::string& name);

struct DesignQuery {
  DesignKind kind;
  SystemConfig config;
  SearchBracket bracket;                 // used by the search/root kinds
  double target_sum_rate = 0.0;          // required-* kinds
  int max_antennas = 1 << 16;            // required-antennas
  std::optional<double> coupling_factor; // required-source-power; default K
};

struct DesignResult {
  DesignKind kind;
  double value = 0.0;   // linear power or antenna count
  bool is_power = false;  // dB echo applies
  std::string text() const;
};

DesignResult run_design(const DesignQuery& query);

// Appends "kind,value,value_db" to the CSV at path, writing a header first
// when the file does not exist yet.
void append_design_csv(const DesignResult& result, const std::string& path);

}  // namespace fdrelay
