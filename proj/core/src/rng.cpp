// SPDX-License-Identifier: Apache-2.0
//
// fdrelay — rate analysis for full-duplex massive MIMO AF relaying
// with low-resolution ADCs
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "fdrelay/rng.hpp"

#include <cassert>
#include <cmath>
#include <cstdlib>

namespace fdrelay {
namespace {

inline std::uint64_t splitmix64(std::uint64_t& z) {
  z += 0x9E3779B97F4A7C15ULL;
  std::uint64_t x = z;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

// 256-layer ziggurat for exp(-x^2/2). Layer widths/heights are computed once
// from the canonical rightmost edge; the construction is self-checked so a
// bad table cannot slip through silently.
struct ZigguratTable {
  static constexpr int kLayers = 256;
  // rightmost layer edge for N = 256
  static constexpr double kR = 3.6541528853610088;
  double x[kLayers + 1];
  double y[kLayers + 1];
  double width[kLayers];          // x[i] / 2^53, maps the mantissa to a point
  std::int64_t accept[kLayers];   // integer acceptance threshold per layer

  ZigguratTable() {
    const double f_r = std::exp(-0.5 * kR * kR);
    const double tail_area = std::sqrt(M_PI / 2.0) * std::erfc(kR / std::sqrt(2.0));
    const double v = kR * f_r + tail_area;  // area of each layer

    x[1] = kR;
    y[1] = f_r;
    x[0] = v / f_r;  // pseudo-width of the base layer (rectangle + tail)
    y[0] = 0.0;
    for (int i = 2; i <= kLayers; ++i) {
      y[i] = y[i - 1] + v / x[i - 1];
      x[i] = (y[i] >= 1.0) ? 0.0 : std::sqrt(-2.0 * std::log(y[i]));
    }
    // with the canonical R the topmost layer closes the density at y = 1
    assert(std::abs(y[kLayers] - 1.0) < 1e-9);
    assert(x[kLayers] < 1e-4);
    x[kLayers] = 0.0;
    y[kLayers] = 1.0;
    for (int i = 0; i < kLayers; ++i) {
      width[i] = x[i] * 0x1.0p-53;
      // conservative floor: borderline points fall through to the exact
      // wedge test
      accept[i] = static_cast<std::int64_t>((x[i + 1] / x[i]) * 0x1.0p53);
    }
  }
};

// namespace-scope instance: initialized at load, no access guard in the
// per-draw fast path
const ZigguratTable g_ziggurat;

inline double u64_to_unit(std::uint64_t r) {
  return static_cast<double>(r >> 11) * 0x1.0p-53;
}

}  // namespace

RandomStream::RandomStream(std::uint64_t master_seed, std::uint64_t stream_id) {
  // independent sub-streams: mix the stream id into the seed before expansion
  std::uint64_t z = master_seed;
  std::uint64_t mixed = splitmix64(z) ^ (stream_id * 0xD2B74407B1CE6E93ULL + 0x8BB84B93962EACC9ULL);
  for (auto& word : state_) {
    word = splitmix64(mixed);
  }
}

std::uint64_t RandomStream::next_u64() {
  std::uint64_t* s = state_;
  const std::uint64_t result = rotl(s[0] + s[3], 23) + s[0];
  const std::uint64_t t = s[1] << 17;
  s[2] ^= s[0];
  s[3] ^= s[1];
  s[1] ^= s[2];
  s[0] ^= s[3];
  s[2] ^= t;
  s[3] = rotl(s[3], 45);
  return result;
}

double RandomStream::uniform() { return u64_to_unit(next_u64()); }

double RandomStream::normal() {
  const ZigguratTable& t = g_ziggurat;
  for (;;) {
    const std::uint64_t r = next_u64();
    const int layer = static_cast<int>(r & 0xFF);
    // signed 54-bit mantissa: the sign rides along for free and the accept
    // test stays in integers
    const std::int64_t j = static_cast<std::int64_t>(r) >> 10;
    const double x = static_cast<double>(j) * t.width[layer];
    if (std::llabs(j) < t.accept[layer]) {
      return x;
    }
    if (layer == 0) {
      // tail beyond R, Marsaglia's exact method
      const double sign = j < 0 ? -1.0 : 1.0;
      for (;;) {
        const double u1 = uniform();
        const double u2 = uniform();
        const double xt = -std::log(1.0 - u1) / ZigguratTable::kR;
        const double yt = -std::log(1.0 - u2);
        if (yt + yt > xt * xt) {
          return sign * (ZigguratTable::kR + xt);
        }
      }
    }
    const double yy = t.y[layer] + uniform() * (t.y[layer + 1] - t.y[layer]);
    if (yy < std::exp(-0.5 * x * x)) {
      return x;
    }
  }
}

std::complex<double> RandomStream::complex_normal(double variance) {
  const double s = std::sqrt(0.5 * variance);
  const double re = normal();
  const double im = normal();
  return {s * re, s * im};
}

void RandomStream::fill_complex_normal(arma::cx_mat& m, double variance) {
  if (variance == 0.0) {
    m.zeros();
    return;
  }
  const double s = std::sqrt(0.5 * variance);
  std::complex<double>* p = m.memptr();
  const arma::uword n = m.n_elem;
  for (arma::uword i = 0; i < n; ++i) {
    const double re = normal();
    const double im = normal();
    p[i] = {s * re, s * im};
  }
}

void RandomStream::fill_complex_normal_columns(arma::cx_mat& m, const arma::vec& column_variance) {
  assert(column_variance.n_elem == m.n_cols);
  for (arma::uword c = 0; c < m.n_cols; ++c) {
    const double s = std::sqrt(0.5 * column_variance[c]);
    std::complex<double>* p = m.colptr(c);
    for (arma::uword i = 0; i < m.n_rows; ++i) {
      const double re = normal();
      const double im = normal();
      p[i] = {s * re, s * im};
    }
  }
}

}  // namespace fdrelay
