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
#include <span>
#include <vector>

#include <armadillo>

#include "fdrelay/system_config.hpp"

namespace fdrelay {

// Monte-Carlo estimate of one scalar expectation.
struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t n = 0;
};

// Sample estimates of every expectation entering the per-user SINR and the
// amplification factor. Per user: the coherent gain power |E{g^T F g}|^2,
// its fluctuation Var(g^T F g), the summed interference powers toward the
// other pairs, the loop-interference power ||g^T F G_RR||^2, the forwarded
// relay-noise power ||g^T F||^2, and the forwarded relay quantization noise
// |g^T F n_q|^2 evaluated in closed conditional form per realization.
// Shared: the four norms that set the relay power constraint.
struct McTermReport {
  std::vector<McEstimate> desired_power;
  std::vector<McEstimate> estimation_var;
  std::vector<McEstimate> interpair;
  std::vector<McEstimate> loop;
  std::vector<McEstimate> relay_noise;
  std::vector<McEstimate> relay_quant;
  McEstimate forward_norm;   // E{||F G_SR||^2}
  McEstimate loop_norm;      // E{||F G_RR||^2}
  McEstimate f_norm;         // E{||F||^2}
  McEstimate f_quant_norm;   // E{||F n_q||^2}
  std::int64_t realizations = 0;
};

// Closed-form values of the same expectations, the comparison targets for
// z-score validation.
struct TermExpectations {
  arma::vec desired_power, estimation_var, interpair, loop, relay_noise, relay_quant;
  double forward_norm = 0.0, loop_norm = 0.0, f_norm = 0.0, f_quant_norm = 0.0;
};
TermExpectations term_expectations(const SystemConfig& config);

// Raw accumulation over a contiguous block of realization indices. Each
// realization r derives its random stream from (seed, r) alone, so any
// partition of an index range draws exactly the same channels; pooling is
// field-wise addition of partial sums in partition order. Sums are kept in
// extended precision so pooled and single-pass results agree to ~1e-15.
class McPartialSums {
 public:
  McPartialSums() = default;
  McPartialSums(int users, std::int64_t first, std::int64_t count);

  McPartialSums& operator+=(const McPartialSums& other);

  int users = 0;
  std::int64_t count = 0;
  // per user
  std::vector<long double> x_re, x_im;            // sum of g^T F g
  std::vector<long double> x2_re, x2_im;          // sum of (g^T F g)^2
  std::vector<long double> abs_x2, abs_x4;        // sums of |.|^2, |.|^4
  std::vector<long double> absx2_x_re, absx2_x_im;  // sum of |.|^2 (g^T F g)
  std::vector<long double> inter, inter2;
  std::vector<long double> loop, loop2;
  std::vector<long double> relay_noise, relay_noise2;
  std::vector<long double> relay_quant, relay_quant2;
  // shared
  long double fwd = 0, fwd2 = 0;
  long double loopn = 0, loopn2 = 0;
  long double fn = 0, fn2 = 0;
  long double fq = 0, fq2 = 0;
  long double gden = 0, gden2 = 0;  // power-constraint denominator sample
};

McPartialSums simulate_terms_partial(const SystemConfig& config, std::int64_t first,
                                     std::int64_t count, std::uint64_t seed);
McPartialSums pool_partial_sums(std::span<const McPartialSums> parts);
McTermReport finalize_terms(const SystemConfig& config, const McPartialSums& sums);

// Full oracle pass: terms, amplification factor and assembled per-user rate
// from one walk over n realizations. The rate uses the Monte-Carlo estimates
// for the six stochastic terms and the closed-form noise floors (destination
// AWGN and destination quantization, which depend on the deterministic
// amplification factor); its standard error comes from a delete-one-batch
// jackknife so correlations between terms are handled exactly.
struct McReport {
  McTermReport terms;
  McEstimate gain;
  std::vector<McEstimate> rate;
  McEstimate sum_rate;
};
McReport simulate_report(const SystemConfig& config, std::int64_t n, std::uint64_t seed);

// Spec'd entry points; all are views of the same walk. n must be >= 100.
McTermReport simulate_terms(const SystemConfig& config, std::int64_t n, std::uint64_t seed);
McEstimate simulate_gamma(const SystemConfig& config, std::int64_t n, std::uint64_t seed);
std::vector<McEstimate> simulate_rate(const SystemConfig& config, std::int64_t n,
                                      std::uint64_t seed);

}  // namespace fdrelay
