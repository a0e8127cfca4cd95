// SPDX-License-Identifier: Apache-2.0
//
// fdrelay — rate analysis for full-duplex massive MIMO AF relaying
// with low-resolution ADCs
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <functional>

#include "fdrelay/system_config.hpp"

namespace fdrelay {

// Bracket for the 1-D searches. tol is relative: searches refine until the
// bracket width (hi/lo - 1 for continuous arguments) and the residual of the
// solved equation both drop below it.
struct SearchBracket {
  double lo = 1e-4;
  double hi = 1e4;
  double tol = 1e-4;
};

// All design routines optimize or invert the large-array rate approximation,
// the expression the power-allocation analysis is carried out on; the one
// exception is required_antennas, which walks the exact rate (it is the
// antenna count that the exact analysis pins down). Exact-rate cross-checks
// are cheap for callers that want them.

// Closed-form optimal relay power sqrt(alpha p_S K / sigma_LI^2), valid for
// unit large-scale gains. Rejects sigma_LI^2 == 0 (optimum unbounded) and
// non-homogeneous gains.
double optimal_relay_power_homogeneous(const SystemConfig& config);

// Golden-section maximization of the approximate sum rate over p_R in the
// bracket (searched in log domain; a monotone reparameterization keeps
// unimodality). Throws when both endpoints beat the bracket midpoint, i.e.
// there is no interior maximum. unimodal_flag, when given, is cleared if a
// coarse pre-scan sees more than one local maximum.
double optimize_relay_power(const SystemConfig& config, const SearchBracket& bracket,
                            bool* unimodal_flag = nullptr);

// Loop-interference level at which full- and half-duplex sum rates cross,
// by bisection. Requires a sign change of the difference over the bracket.
double duplex_crossover_loop_interference(const SystemConfig& config,
                                          const SearchBracket& bracket);

// Smallest antenna count at which full-duplex catches up with half-duplex.
// Bracket endpoints are rounded to integers; requires a sign change.
int duplex_crossover_antennas(const SystemConfig& config, const SearchBracket& bracket);

// Minimal source power reaching the target sum rate, with the relay power
// coupled to p_S (default p_R = K * p_S). The sum rate is checked to be
// nondecreasing along a coarse scan of the bracket before bisecting.
using PowerCoupling = std::function<double(double)>;
double required_source_power(const SystemConfig& config, double target_sum_rate,
                             const SearchBracket& bracket,
                             const PowerCoupling& coupling = {});

// Minimal antenna count reaching the target sum rate under the exact rate;
// ties break toward fewer antennas. Throws when the target is unreachable at
// max_antennas.
int required_antennas(const SystemConfig& config, double target_sum_rate,
                      int max_antennas);

}  // namespace fdrelay
