// SPDX-License-Identifier: Apache-2.0
//
// fdrelay — rate analysis for full-duplex massive MIMO AF relaying
// with low-resolution ADCs
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "fdrelay/rng.hpp"

using fdrelay::RandomStream;

TEST_CASE("streams are deterministic in (seed, stream_id)") {
  RandomStream a(42, 7);
  RandomStream b(42, 7);
  for (int i = 0; i < 1000; ++i) {
    REQUIRE(a.next_u64() == b.next_u64());
  }
}

TEST_CASE("different stream ids give different draws") {
  RandomStream a(42, 0);
  RandomStream b(42, 1);
  int agree = 0;
  for (int i = 0; i < 256; ++i) {
    agree += a.next_u64() == b.next_u64();
  }
  REQUIRE(agree == 0);
}

TEST_CASE("adjacent streams are uncorrelated") {
  // sample correlation of normals across neighbouring stream ids
  const int n = 200000;
  RandomStream a(9, 100), b(9, 101);
  double sxy = 0, sxx = 0, syy = 0;
  for (int i = 0; i < n; ++i) {
    const double x = a.normal();
    const double y = b.normal();
    sxy += x * y;
    sxx += x * x;
    syy += y * y;
  }
  REQUIRE(std::abs(sxy / std::sqrt(sxx * syy)) < 0.01);
}

TEST_CASE("uniform lies in [0, 1) with mean 1/2") {
  RandomStream rng(3, 0);
  const int n = 1000000;
  double sum = 0;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  REQUIRE_THAT(sum / n, Catch::Matchers::WithinAbs(0.5, 0.002));
}

TEST_CASE("normal sampler matches Gaussian moments and tails") {
  RandomStream rng(1234, 0);
  const int n = 4000000;
  double s1 = 0, s2 = 0, s3 = 0, s4 = 0;
  int beyond3 = 0, beyond1 = 0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal();
    s1 += z;
    s2 += z * z;
    s3 += z * z * z;
    s4 += z * z * z * z;
    beyond3 += std::abs(z) > 3.0;
    beyond1 += std::abs(z) > 1.0;
  }
  const double inv = 1.0 / n;
  REQUIRE_THAT(s1 * inv, Catch::Matchers::WithinAbs(0.0, 5.0 / std::sqrt(n)));
  REQUIRE_THAT(s2 * inv, Catch::Matchers::WithinAbs(1.0, 5.0 * std::sqrt(2.0 / n)));
  REQUIRE_THAT(s3 * inv, Catch::Matchers::WithinAbs(0.0, 5.0 * std::sqrt(15.0 / n)));
  REQUIRE_THAT(s4 * inv, Catch::Matchers::WithinAbs(3.0, 5.0 * std::sqrt(96.0 / n)));
  // P(|Z| > 3) = 0.0026998, P(|Z| > 1) = 0.3173105
  REQUIRE_THAT(beyond3 * inv, Catch::Matchers::WithinAbs(0.0026998, 5e-4));
  REQUIRE_THAT(beyond1 * inv, Catch::Matchers::WithinAbs(0.3173105, 2e-3));
}

TEST_CASE("complex normals have the stated variance, halved per part") {
  RandomStream rng(5, 2);
  const int n = 400000;
  const double variance = 2.5;
  double re2 = 0, im2 = 0, cross = 0;
  for (int i = 0; i < n; ++i) {
    const auto z = rng.complex_normal(variance);
    re2 += z.real() * z.real();
    im2 += z.imag() * z.imag();
    cross += z.real() * z.imag();
  }
  REQUIRE_THAT(re2 / n, Catch::Matchers::WithinRel(variance / 2, 0.02));
  REQUIRE_THAT(im2 / n, Catch::Matchers::WithinRel(variance / 2, 0.02));
  REQUIRE_THAT(cross / n, Catch::Matchers::WithinAbs(0.0, 0.02 * variance));
}

TEST_CASE("matrix fill follows the documented column-major draw order") {
  arma::cx_mat m(3, 2);
  RandomStream fill_stream(77, 5);
  fill_stream.fill_complex_normal(m, 4.0);

  RandomStream scalar_stream(77, 5);
  for (arma::uword c = 0; c < 2; ++c) {
    for (arma::uword r = 0; r < 3; ++r) {
      REQUIRE(m(r, c) == scalar_stream.complex_normal(4.0));
    }
  }
}

TEST_CASE("column-variance fill matches per-column scalar draws") {
  arma::cx_mat m(4, 2);
  const arma::vec var{1.0, 9.0};
  RandomStream fill_stream(8, 3);
  fill_stream.fill_complex_normal_columns(m, var);

  RandomStream scalar_stream(8, 3);
  for (arma::uword c = 0; c < 2; ++c) {
    for (arma::uword r = 0; r < 4; ++r) {
      REQUIRE(m(r, c) == scalar_stream.complex_normal(var[c]));
    }
  }
}
