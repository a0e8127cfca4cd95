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

#include "fdrelay/rate_exact.hpp"
#include "fdrelay/system_config.hpp"

namespace fdrelay {

// Large-array rate approximation: keeps the leading order of every exact
// SINR term. Accurate to a few percent from M ~ 64 upward and the basis for
// all design/optimization routines. The breakdown's gain field carries the
// exact amplification factor for reference; none of the approximate terms
// depend on it.
RateBreakdown approx_rate(const SystemConfig& config);

// Rate limit as the antenna count grows without bound. Finite exactly when
// the destination ADCs are coarse (theta < 1); the limit is independent of
// the relay ADC resolution. "Unbounded" is an explicit variant, not a
// floating-point infinity. theta within 1e-12 of 1 counts as 1.
struct InfiniteAntennaLimit {
  bool unbounded = false;
  arma::vec rate;  // per user, valid when !unbounded
};
InfiniteAntennaLimit limit_rate_infinite_M(const SystemConfig& config);

// Per-user rate limit when transmit powers are scaled down with the array,
// p_S = E_S/M and p_R = E_R/M, with the pilot power held fixed. The config's
// p_S and p_R are ignored; estimation quality comes from its p_p.
arma::vec scaled_power_limit(const SystemConfig& config, double energy_source,
                             double energy_relay);

// The two single-sided quantization deployments at distortion factor rho:
// relay_only has coarse ADCs at the relay and ideal destinations
// (which also degrades channel estimation); dest_only is the reverse.
// dest_only keeps only the destination-quantization terms that survive at
// large M. Requires rho in (0, 1).
struct PlacementRates {
  arma::vec relay_only;  // alpha = rho, theta = 1
  arma::vec dest_only;   // alpha = 1, theta = rho
};
PlacementRates placement_rates(const SystemConfig& config, double rho);

// Half-duplex baseline over the same coherence structure: the two hops split
// the data phase, the prelog halves, data powers double for equal energy per
// coherence interval, and there is no loop-interference term. Pass the
// full-duplex config; the doubling happens inside.
arma::vec half_duplex_rate(const SystemConfig& config);

struct AsymptoticReport {
  RateBreakdown approx_breakdown;
  InfiniteAntennaLimit limit_rate;
  arma::vec scaled_limit_rate;
  arma::vec hd_rate;
};
AsymptoticReport asymptotic_report(const SystemConfig& config, double energy_source,
                                   double energy_relay);

}  // namespace fdrelay
