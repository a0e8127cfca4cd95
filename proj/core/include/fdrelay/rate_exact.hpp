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

#include "fdrelay/system_config.hpp"

namespace fdrelay {

// Per-user SINR decomposition. The effective noise seen by destination k
// splits into seven nonnegative terms; the per-user rate is
//   rate[k] = prelog * log2(1 + desired[k] / (sum of the other seven)).
// With perfect ADCs (alpha = theta = 1) both quantization terms are
// exactly zero.
struct RateBreakdown {
  arma::vec desired;      // coherent beamforming gain
  arma::vec estimation;   // gain-uncertainty (variance) penalty
  arma::vec interpair;    // interference from the other K-1 pairs
  arma::vec loop;         // residual self-interference through the relay
  arma::vec relay_noise;  // AWGN forwarded by the relay
  arma::vec relay_quant;  // relay ADC quantization noise
  arma::vec dest_noise;   // AWGN at the destination
  arma::vec dest_quant;   // destination ADC quantization noise
  double gain = 0.0;      // relay amplification factor gamma
  arma::vec sinr;
  arma::vec rate;         // bits/s/Hz per user
  double sum_rate = 0.0;

  void finalize(const SystemConfig& config);  // fills sinr, rate, sum_rate
};

// Amplification factor enforcing the relay power constraint, in closed form
// over the training statistics. Always finite and positive for a valid
// config.
double amplification_gain(const SystemConfig& config);

// Exact closed-form SINR terms. Internally terms are evaluated normalized by
// M^4 so that antenna counts up to ~1e7 (used for limit checks) stay well
// scaled; the returned fields are the raw values.
RateBreakdown exact_breakdown(const SystemConfig& config);

// exact_breakdown with rates filled in.
RateBreakdown exact_rate(const SystemConfig& config);

}  // namespace fdrelay
