// SPDX-License-Identifier: Apache-2.0
//
// fdrelay — rate analysis for full-duplex massive MIMO AF relaying
// with low-resolution ADCs
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <optional>

#include <armadillo>

#include "fdrelay/rng.hpp"

namespace fdrelay {

// Additive quantization noise model (AQNM): a b-bit ADC acts on its input y
// as rho*y + n_q, with n_q zero-mean complex Gaussian of variance
// rho*(1-rho)*E{|y|^2} conditioned on the channel realization. rho is the
// distortion factor (alpha at the relay, theta at a destination).
//
// The model is a linear-gain-plus-noise abstraction of an optimal non-uniform
// quantizer; it is known to be most accurate at low SNR, which is the regime
// quantized large-array receivers operate in. No SNR guard is enforced.

// Depths above this are indistinguishable from infinite resolution in double
// precision; the distortion factor is clamped to exactly 1.
inline constexpr int kMaxAdcBits = 64;

// Distortion factor for a given bit depth. Tabulated optimal-quantizer values
// for b in 1..5, the high-rate approximation 1 - (pi*sqrt(3)/2)*2^(-2b) for
// b >= 6, and exactly 1 for infinite resolution (nullopt).
// Throws std::invalid_argument for b < 1.
double distortion_factor(std::optional<int> bits);

struct AdcModel {
  double rho = 1.0;          // distortion factor in (0, 1]
  std::optional<int> bits;   // quantizer depth; nullopt = infinite resolution

  static AdcModel from_bits(int bits);
  static AdcModel infinite_resolution();
  // direct distortion-factor specification (rho in (0, 1]); the bit depth is
  // recorded only when rho matches a tabulated value
  static AdcModel from_rho(double rho);

  bool is_infinite() const { return rho == 1.0; }
};

struct QuantizedVector {
  arma::cx_vec output;        // rho*input + n_q
  arma::vec noise_variance;   // per-element Var(n_q) = rho*(1-rho)*input_power
};

// Element-wise AQNM transform. input_power holds the per-element second
// moment E{|y_i|^2} of the conditioning realization; the drawn quantization
// noise is circularly-symmetric complex Gaussian. rho == 1 adds no noise and
// consumes no randomness.
// Throws std::invalid_argument on dimension mismatch or rho outside (0, 1].
QuantizedVector aqnm_transform(const arma::cx_vec& input, double rho,
                               const arma::vec& input_power, RandomStream& rng);

}  // namespace fdrelay
