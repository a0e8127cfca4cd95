// SPDX-License-Identifier: Apache-2.0
//
// fdrelay — rate analysis for full-duplex massive MIMO AF relaying
// with low-resolution ADCs
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "fdrelay/rate_exact.hpp"
#include "fdrelay/units.hpp"

using namespace fdrelay;

namespace {

SystemConfig fig_config(int m, double ps_db) {
  return make_homogeneous_config(m, 5, from_db(ps_db), from_db(10), from_db(10),
                                 from_db(0), AdcModel::from_bits(2),
                                 AdcModel::from_bits(2));
}

}  // namespace

TEST_CASE("amplification factor vanishes with the relay power") {
  SystemConfig c = fig_config(64, 0);
  c.relay_power = 1e-12;
  REQUIRE(amplification_gain(c) < 1e-5);
  REQUIRE(amplification_gain(c) > 0.0);
}

TEST_CASE("amplification factor decreases strictly with the array size") {
  double prev = std::numeric_limits<double>::infinity();
  for (int m : {32, 64, 128, 256}) {
    const double g = amplification_gain(fig_config(m, 0));
    REQUIRE(g < prev);
    prev = g;
  }
}

TEST_CASE("ideal converters leave no quantization terms") {
  SystemConfig c = fig_config(64, 0);
  c.relay_adc = AdcModel::infinite_resolution();
  c.dest_adc = AdcModel::infinite_resolution();
  const RateBreakdown b = exact_breakdown(c);
  REQUIRE(b.relay_quant.max() == 0.0);
  REQUIRE(b.dest_quant.max() == 0.0);
}

TEST_CASE("a single pair sees no interpair interference") {
  const SystemConfig c = make_homogeneous_config(32, 1, 1.0, 1.0, 1.0, 0.1,
                                                 AdcModel::from_bits(2),
                                                 AdcModel::from_bits(2));
  const RateBreakdown b = exact_breakdown(c);
  REQUIRE(b.interpair.max() == 0.0);
}

TEST_CASE("rate identities hold on the breakdown") {
  const SystemConfig c = fig_config(64, 10);
  const RateBreakdown b = exact_rate(c);
  for (int k = 0; k < c.user_pairs; ++k) {
    const double denom = b.estimation[k] + b.interpair[k] + b.loop[k] +
                         b.relay_noise[k] + b.relay_quant[k] + b.dest_noise[k] +
                         b.dest_quant[k];
    REQUIRE_THAT(b.sinr[k], Catch::Matchers::WithinRel(b.desired[k] / denom, 1e-12));
    REQUIRE_THAT(b.rate[k],
                 Catch::Matchers::WithinRel(
                     c.prelog() * std::log2(1.0 + b.sinr[k]), 1e-12));
  }
  REQUIRE_THAT(b.sum_rate, Catch::Matchers::WithinRel(arma::accu(b.rate), 1e-12));
}

TEST_CASE("training-only coherence interval carries no data") {
  SystemConfig c = fig_config(64, 0);
  c.coherence_symbols = 2 * c.pilot_symbols;
  const RateBreakdown b = exact_rate(c);
  REQUIRE(b.rate.max() == 0.0);
  REQUIRE(b.sum_rate == 0.0);
}

TEST_CASE("rate grows with the array and shrinks with coarse ADCs") {
  double prev = 0.0;
  for (int m : {32, 64, 128, 256, 512}) {
    const double r = exact_rate(fig_config(m, 0)).rate[0];
    REQUIRE(r > prev);
    prev = r;
  }
  SystemConfig c = fig_config(64, 0);
  const double fine = exact_rate(c).rate[0];
  c.relay_adc = AdcModel::from_bits(1);
  const double coarse = exact_rate(c).rate[0];
  REQUIRE(coarse < fine);
  c.relay_adc = AdcModel::from_bits(2);
  c.dest_adc = AdcModel::from_bits(1);
  REQUIRE(exact_rate(c).rate[0] < fine);
}

TEST_CASE("monotonicity over the standard directions") {
  const SystemConfig base = fig_config(64, 0);
  const double r0 = exact_rate(base).sum_rate;

  SystemConfig c = base;
  c.pilot_power *= 2.0;
  REQUIRE(exact_rate(c).sum_rate >= r0);

  c = base;
  c.loop_interference *= 10.0;
  REQUIRE(exact_rate(c).sum_rate <= r0);

  // per-user rate falls as more pairs share the relay
  const double per_user_5 = exact_rate(base).rate[0];
  const SystemConfig c8 = make_homogeneous_config(
      64, 8, base.source_power, base.relay_power, base.pilot_power,
      base.loop_interference, base.relay_adc, base.dest_adc);
  REQUIRE(exact_rate(c8).rate[0] <= per_user_5);
}

TEST_CASE("permuting users permutes the rates") {
  SystemConfig c = fig_config(16, 0);
  c.beta_sr = arma::vec{0.5, 1.0, 1.5, 2.0, 0.8};
  c.beta_rd = arma::vec{1.2, 0.6, 1.0, 0.9, 1.7};
  const arma::vec before = exact_rate(c).rate;

  const arma::uvec perm{3, 0, 4, 1, 2};
  SystemConfig p = c;
  p.beta_sr = c.beta_sr(perm);
  p.beta_rd = c.beta_rd(perm);
  const arma::vec after = exact_rate(p).rate;
  for (int k = 0; k < 5; ++k) {
    REQUIRE_THAT(after[k], Catch::Matchers::WithinRel(before[perm[k]], 1e-12));
  }
}

TEST_CASE("huge arrays evaluate without overflow") {
  const SystemConfig c = fig_config(10000000, 0);
  const RateBreakdown b = exact_rate(c);
  REQUIRE(std::isfinite(b.sum_rate));
  REQUIRE(b.sum_rate > 0.0);
  REQUIRE(std::isfinite(b.desired[0]));
}
