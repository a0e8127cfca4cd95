// SPDX-License-Identifier: Apache-2.0
//
// fdrelay — rate analysis for full-duplex massive MIMO AF relaying
// with low-resolution ADCs
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "fdrelay/config_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fdrelay/units.hpp"

namespace fdrelay {
namespace {

using nlohmann::json;

// "<x>dB" (case-insensitive suffix, optional space) -> linear; plain numbers
// pass through as linear
double power_value(const json& j, const std::string& key) {
  if (j.is_number()) {
    return j.get<double>();
  }
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    std::string lower(s);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    auto pos = lower.rfind("db");
    if (pos == std::string::npos || pos + 2 != lower.size()) {
      throw ConfigError("config: key '" + key + "' string value must end in dB");
    }
    std::string num = s.substr(0, pos);
    while (!num.empty() && std::isspace(static_cast<unsigned char>(num.back()))) {
      num.pop_back();
    }
    try {
      std::size_t used = 0;
      const double db = std::stod(num, &used);
      if (used != num.size()) throw std::invalid_argument(num);
      return from_db(db);
    } catch (const std::exception&) {
      throw ConfigError("config: key '" + key + "' has malformed dB value '" + s + "'");
    }
  }
  throw ConfigError("config: key '" + key + "' must be a number or dB string");
}

AdcModel adc_value(const json& j, const std::string& key) {
  if (j.is_string()) {
    if (j.get<std::string>() == "infinite") {
      return AdcModel::infinite_resolution();
    }
    throw ConfigError("config: key '" + key + "' must be a bit depth or \"infinite\"");
  }
  if (j.is_number_integer()) {
    try {
      return AdcModel::from_bits(j.get<int>());
    } catch (const std::exception& e) {
      throw ConfigError("config: key '" + key + "': " + e.what());
    }
  }
  throw ConfigError("config: key '" + key + "' must be a bit depth or \"infinite\"");
}

const json& require_key(const json& j, const std::string& key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw ConfigError("config: missing required key '" + key + "'");
  }
  return *it;
}

SystemConfig config_from_json(const json& j) {
  if (!j.is_object()) {
    throw ConfigError("config: top-level JSON value must be an object");
  }
  static const char* known[] = {"M",       "K",       "tau_c",    "tau_p",
                                "p_S",     "p_R",     "p_p",      "sigma_LI2",
                                "beta_SR", "beta_RD", "relay_adc", "dest_adc"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find_if(std::begin(known), std::end(known), [&](const char* k) {
          return it.key() == k;
        }) == std::end(known)) {
      throw ConfigError("config: unknown key '" + it.key() + "'");
    }
  }

  SystemConfig c;
  c.relay_antennas = require_key(j, "M").get<int>();
  c.user_pairs = require_key(j, "K").get<int>();
  c.coherence_symbols = j.value("tau_c", 196);
  c.pilot_symbols = j.value("tau_p", c.user_pairs);
  c.source_power = power_value(require_key(j, "p_S"), "p_S");
  c.relay_power = power_value(require_key(j, "p_R"), "p_R");
  c.pilot_power = power_value(require_key(j, "p_p"), "p_p");
  c.loop_interference = power_value(require_key(j, "sigma_LI2"), "sigma_LI2");
  c.relay_adc = adc_value(require_key(j, "relay_adc"), "relay_adc");
  c.dest_adc = adc_value(require_key(j, "dest_adc"), "dest_adc");

  auto beta = [&](const char* key) -> arma::vec {
    if (!j.contains(key)) {
      return arma::ones(c.user_pairs);
    }
    const json& arr = j.at(key);
    if (!arr.is_array()) {
      throw ConfigError(std::string("config: key '") + key + "' must be an array");
    }
    arma::vec v(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
      v[i] = arr[i].get<double>();
    }
    return v;
  };
  c.beta_sr = beta("beta_SR");
  c.beta_rd = beta("beta_RD");

  try {
    c.validate();
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  return c;
}

}  // namespace

SystemConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("config: cannot open file " + path);
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

SystemConfig parse_config_text(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: JSON parse error: ") + e.what());
  }
  return config_from_json(j);
}

void apply_override(std::string& json_text, const std::string& key_equals_value) {
  const auto eq = key_equals_value.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError("override must have the form key=value: " + key_equals_value);
  }
  const std::string key = key_equals_value.substr(0, eq);
  const std::string value = key_equals_value.substr(eq + 1);

  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: JSON parse error: ") + e.what());
  }
  // value grammar follows the file schema: try JSON first (numbers, arrays,
  // "infinite" would need quotes), else treat as a bare string (dB values,
  // infinite)
  json parsed_value;
  try {
    parsed_value = json::parse(value);
    if (parsed_value.is_object()) {
      throw ConfigError("override value cannot be an object: " + key_equals_value);
    }
  } catch (const json::parse_error&) {
    parsed_value = value;
  }
  j[key] = parsed_value;
  json_text = j.dump();
}

}  // namespace fdrelay
