// SPDX-License-Identifier: Apache-2.0
//
// fdrelay — rate analysis for full-duplex massive MIMO AF relaying
// with low-resolution ADCs
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <string>

#include "fdrelay/system_config.hpp"

namespace fdrelay {

// Raised for malformed input (missing keys, bad values, violated config
// invariants). CLI maps it to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Scenario files are JSON with these keys (exactly the SystemConfig fields):
//
//   M, K          : positive integers (required)
//   tau_c         : coherence length, default 196
//   tau_p         : pilot length, default K
//   p_S, p_R, p_p : required powers; number (linear) or string "<x>dB"
//   sigma_LI2     : required; number (linear) or string "<x>dB"
//   beta_SR,
//   beta_RD       : length-K arrays, default all-ones
//   relay_adc,
//   dest_adc      : required; bit depth (integer) or "infinite"
//
// Power values given in dB convert through the single 10*log10 rule.
SystemConfig parse_config(const std::string& path);

// Same schema from an in-memory JSON text (used by presets and overrides).
SystemConfig parse_config_text(const std::string& json_text);

// In-place override of one field, value syntax as in the file schema
// (e.g. "M=128", "p_S=-10dB", "relay_adc=infinite", "beta_SR=[1,2]").
void apply_override(std::string& json_text, const std::string& key_equals_value);

}  // namespace fdrelay
