// SPDX-License-Identifier: Apache-2.0
//
// fdrelay — rate analysis for full-duplex massive MIMO AF relaying
// with low-resolution ADCs
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <set>
#include <string>
#include <vector>

#include "fdrelay/experiment.hpp"

namespace fdrelay {

// Named experiments fig3..fig9, each carrying the scenario parameters of the
// corresponding study (see README for the catalog). The base is stored as
// config JSON so command-line overrides go through the ordinary config
// parser. fig8 is an inverse-design sweep: per antenna count it reports the
// minimal source power reaching the target sum rate under p_R = K * p_S.
struct Preset {
  std::string name;
  std::string description;
  std::string base_json;
  std::string axis;
  std::vector<double> values;
  std::set<OutputKind> outputs;
  bool design_mode = false;
  double design_target = 0.0;
};

const std::vector<Preset>& presets();
const Preset* find_preset(const std::string& name);

// Applies key=value overrides to the preset base (plus optional axis/values/
// outputs replacements), evaluates it, and writes the CSV when a path is
// given.
SweepResult run_preset(const Preset& preset, const std::vector<std::string>& overrides,
                       std::int64_t mc_n, std::uint64_t seed,
                       const std::string& csv_path);

}  // namespace fdrelay
