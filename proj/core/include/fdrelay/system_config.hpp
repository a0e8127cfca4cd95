// SPDX-License-Identifier: Apache-2.0
//
// fdrelay — rate analysis for full-duplex massive MIMO AF relaying
// with low-resolution ADCs
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <armadillo>

#include "fdrelay/adc.hpp"

namespace fdrelay {

// One scenario: a multipair amplify-and-forward full-duplex relay with
// relay_antennas antennas serving user_pairs source/destination pairs.
// All powers are linear (not dB). Each coherence interval of
// coherence_symbols symbols spends 2*pilot_symbols symbols on training
// (one pilot phase per hop), leaving the prelog fraction for data.
struct SystemConfig {
  int relay_antennas = 0;        // M
  int user_pairs = 0;            // K
  int coherence_symbols = 196;   // tau_c
  int pilot_symbols = 0;         // tau_p, at least K
  double source_power = 0.0;     // p_S per source
  double relay_power = 0.0;      // p_R
  double pilot_power = 0.0;      // p_p per pilot symbol
  double loop_interference = 0.0;  // sigma_LI^2, residual self-interference level
  arma::vec beta_sr;             // large-scale gains source->relay, length K
  arma::vec beta_rd;             // large-scale gains relay->destination, length K
  AdcModel relay_adc = AdcModel::infinite_resolution();  // alpha
  AdcModel dest_adc = AdcModel::infinite_resolution();   // theta

  // Throws std::invalid_argument naming the violated rule.
  void validate() const;

  double prelog() const {
    return static_cast<double>(coherence_symbols - 2 * pilot_symbols) / coherence_symbols;
  }

  bool homogeneous_unit_gains() const;
};

// Convenience builder for the common homogeneous scenario
// (beta = 1 for every link, tau_p = K).
SystemConfig make_homogeneous_config(int relay_antennas, int user_pairs,
                                     double source_power, double relay_power,
                                     double pilot_power, double loop_interference,
                                     AdcModel relay_adc, AdcModel dest_adc,
                                     int coherence_symbols = 196);

}  // namespace fdrelay
