// SPDX-License-Identifier: Apache-2.0
//
// fdrelay — rate analysis for full-duplex massive MIMO AF relaying
// with low-resolution ADCs
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "fdrelay/adc.hpp"

#include <cmath>
#include <stdexcept>

namespace fdrelay {
namespace {

// optimal non-uniform quantizer distortion factors for b = 1..5, stored to
// the precision they are usually quoted at
constexpr double kTabulatedRho[5] = {0.6366, 0.8825, 0.96546, 0.990503, 0.997501};

}  // namespace

double distortion_factor(std::optional<int> bits) {
  if (!bits.has_value()) {
    return 1.0;
  }
  const int b = *bits;
  if (b < 1) {
    throw std::invalid_argument("distortion_factor: bit depth must be >= 1");
  }
  if (b <= 5) {
    return kTabulatedRho[b - 1];
  }
  if (b > kMaxAdcBits) {
    return 1.0;
  }
  return 1.0 - (M_PI * std::sqrt(3.0) / 2.0) * std::exp2(-2.0 * b);
}

AdcModel AdcModel::from_bits(int bits) {
  AdcModel m;
  m.bits = bits;
  m.rho = distortion_factor(bits);
  return m;
}

AdcModel AdcModel::infinite_resolution() {
  return AdcModel{1.0, std::nullopt};
}

AdcModel AdcModel::from_rho(double rho) {
  if (!(rho > 0.0) || rho > 1.0) {
    throw std::invalid_argument("AdcModel: rho must lie in (0, 1]");
  }
  AdcModel m;
  m.rho = rho;
  for (int b = 1; b <= 5; ++b) {
    if (rho == kTabulatedRho[b - 1]) {
      m.bits = b;
    }
  }
  return m;
}

QuantizedVector aqnm_transform(const arma::cx_vec& input, double rho,
                               const arma::vec& input_power, RandomStream& rng) {
  if (!(rho > 0.0) || rho > 1.0) {
    throw std::invalid_argument("aqnm_transform: rho must lie in (0, 1]");
  }
  if (input.n_elem != input_power.n_elem) {
    throw std::invalid_argument("aqnm_transform: input and input_power sizes differ");
  }

  QuantizedVector q;
  q.noise_variance = rho * (1.0 - rho) * input_power;
  if (rho == 1.0) {
    q.output = input;
    q.noise_variance.zeros();
    return q;
  }
  q.output.set_size(input.n_elem);
  for (arma::uword i = 0; i < input.n_elem; ++i) {
    q.output[i] = rho * input[i] + rng.complex_normal(q.noise_variance[i]);
  }
  return q;
}

}  // namespace fdrelay
