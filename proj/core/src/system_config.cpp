// SPDX-License-Identifier: Apache-2.0
//
// fdrelay — rate analysis for full-duplex massive MIMO AF relaying
// with low-resolution ADCs
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "fdrelay/system_config.hpp"

#include <stdexcept>
#include <string>

namespace fdrelay {
namespace {

void require(bool ok, const std::string& rule) {
  if (!ok) {
    throw std::invalid_argument("SystemConfig: " + rule);
  }
}

}  // namespace

void SystemConfig::validate() const {
  require(relay_antennas >= 1, "M must be a positive integer");
  require(user_pairs >= 1, "K must be a positive integer");
  require(pilot_symbols >= user_pairs, "tau_p must be at least K");
  require(coherence_symbols >= 2 * pilot_symbols, "tau_c must be at least 2*tau_p");
  require(source_power > 0.0, "p_S must be strictly positive");
  require(relay_power > 0.0, "p_R must be strictly positive");
  require(pilot_power > 0.0, "p_p must be strictly positive");
  require(loop_interference >= 0.0, "sigma_LI2 must be nonnegative");
  require(beta_sr.n_elem == static_cast<arma::uword>(user_pairs),
          "beta_SR must have length K");
  require(beta_rd.n_elem == static_cast<arma::uword>(user_pairs),
          "beta_RD must have length K");
  require(beta_sr.min() > 0.0, "beta_SR entries must be strictly positive");
  require(beta_rd.min() > 0.0, "beta_RD entries must be strictly positive");
  require(relay_adc.rho > 0.0 && relay_adc.rho <= 1.0, "relay_adc rho must lie in (0, 1]");
  require(dest_adc.rho > 0.0 && dest_adc.rho <= 1.0, "dest_adc rho must lie in (0, 1]");
}

bool SystemConfig::homogeneous_unit_gains() const {
  return beta_sr.n_elem > 0 && beta_rd.n_elem > 0 &&
         arma::all(beta_sr == 1.0) && arma::all(beta_rd == 1.0);
}

SystemConfig make_homogeneous_config(int relay_antennas, int user_pairs,
                                     double source_power, double relay_power,
                                     double pilot_power, double loop_interference,
                                     AdcModel relay_adc, AdcModel dest_adc,
                                     int coherence_symbols) {
  SystemConfig c;
  c.relay_antennas = relay_antennas;
  c.user_pairs = user_pairs;
  c.coherence_symbols = coherence_symbols;
  c.pilot_symbols = user_pairs;
  c.source_power = source_power;
  c.relay_power = relay_power;
  c.pilot_power = pilot_power;
  c.loop_interference = loop_interference;
  c.beta_sr = arma::ones(user_pairs);
  c.beta_rd = arma::ones(user_pairs);
  c.relay_adc = relay_adc;
  c.dest_adc = dest_adc;
  c.validate();
  return c;
}

}  // namespace fdrelay
