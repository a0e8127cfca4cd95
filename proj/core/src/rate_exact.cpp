// SPDX-License-Identifier: Apache-2.0
//
// fdrelay — rate analysis for full-duplex massive MIMO AF relaying
// with low-resolution ADCs
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "fdrelay/rate_exact.hpp"

#include <cmath>
#include <numbers>

#include "fdrelay/channel.hpp"

namespace fdrelay {

void RateBreakdown::finalize(const SystemConfig& config) {
  const arma::vec denom = estimation + interpair + loop + relay_noise +
                          relay_quant + dest_noise + dest_quant;
  sinr = desired / denom;
  rate.set_size(sinr.n_elem);
  const double prelog = config.prelog();
  for (arma::uword k = 0; k < sinr.n_elem; ++k) {
    rate[k] = prelog * std::log1p(sinr[k]) / std::numbers::ln2;
  }
  sum_rate = arma::accu(rate);
}

double amplification_gain(const SystemConfig& config) {
  config.validate();
  const EstimationStats st = estimation_stats(config);
  const double m = config.relay_antennas;
  const double alpha = config.relay_adc.rho;

  const double forward = arma::accu(arma::square(st.est_var_sr) % st.est_var_rd);
  const double cross = arma::accu(st.est_var_sr % st.est_var_rd);
  const double den =
      config.source_power * forward * (m * alpha * alpha + alpha * (1.0 - alpha)) +
      alpha * cross *
          (config.source_power * arma::accu(config.beta_sr) +
           config.relay_power * config.loop_interference + 1.0);
  return std::sqrt(config.relay_power / den) / m;
}

RateBreakdown exact_breakdown(const SystemConfig& config) {
  config.validate();
  const EstimationStats st = estimation_stats(config);
  const int nk = config.user_pairs;
  const double m = config.relay_antennas;
  const double ps = config.source_power;
  const double pr = config.relay_power;
  const double sli = config.loop_interference;
  const double alpha = config.relay_adc.rho;
  const double theta = config.dest_adc.rho;
  const arma::vec& ssr = st.est_var_sr;
  const arma::vec& srd = st.est_var_rd;
  const arma::vec& bsr = config.beta_sr;
  const arma::vec& brd = config.beta_rd;

  const double cross = arma::accu(ssr % srd);                      // sum sigma^2_SR sigma^2_RD
  const double sum_bsr = arma::accu(bsr);
  const double sum_srd = arma::accu(srd);
  const double gamma = amplification_gain(config);

  // all denominator terms normalized by M^4; the M^3-scale pieces carry 1/M,
  // the M^2-scale pieces 1/M^2
  const double im = 1.0 / m;
  const double im2 = im * im;

  RateBreakdown b;
  b.gain = gamma;
  b.desired.set_size(nk);
  b.estimation.set_size(nk);
  b.interpair.set_size(nk);
  b.loop.set_size(nk);
  b.relay_noise.set_size(nk);
  b.relay_quant.set_size(nk);
  b.dest_noise.set_size(nk);
  b.dest_quant.set_size(nk);

  const double dest_noise_norm = im2 * im2 / (alpha * alpha * gamma * gamma);

  for (int k = 0; k < nk; ++k) {
    const double s2 = ssr[k], r2 = srd[k];

    b.desired[k] = ps * s2 * s2 * r2 * r2;

    b.estimation[k] =
        ps * im * s2 * r2 * (bsr[k] * r2 + brd[k] * s2) + ps * im2 * bsr[k] * brd[k] * cross;

    double inter = 0.0;
    for (int j = 0; j < nk; ++j) {
      if (j == k) continue;
      inter += im * (s2 * r2 * r2 * bsr[j] + brd[k] * ssr[j] * ssr[j] * srd[j]);
      const double others = cross - s2 * r2 - ssr[j] * srd[j];
      inter += im2 * bsr[j] * brd[k] * (others + s2 * r2 + ssr[j] * srd[j]);
    }
    b.interpair[k] = ps * inter;

    const double rx_power = im * s2 * r2 * r2 + im2 * brd[k] * cross;
    b.loop[k] = sli * pr * rx_power;
    b.relay_noise[k] = rx_power;

    b.relay_quant[k] =
        (1.0 - alpha) / alpha *
        (im * ps * s2 * r2 * r2 * (s2 + sum_bsr) +
         im * (pr * sli + 1.0) * s2 * r2 * r2 +
         im2 * (pr * sli + 1.0) * brd[k] * cross +
         im2 * ps * brd[k] * arma::accu(ssr % srd % (ssr + sum_bsr)));

    b.dest_noise[k] = dest_noise_norm;

    b.dest_quant[k] =
        (1.0 - theta) / theta * ps * im * s2 * r2 * r2 * (m * s2 + sum_bsr) +
        (1.0 - theta) / theta * ps * im2 * s2 * (m * s2 + sum_bsr) * brd[k] * sum_srd +
        (1.0 - theta) / (alpha * theta) * im * (pr * sli + 1.0) * s2 * r2 * r2 +
        (1.0 - theta) / (alpha * theta) * im2 * (pr * sli + 1.0) * brd[k] * cross +
        (1.0 - alpha) * (1.0 - theta) / (alpha * theta) * im * ps * s2 * r2 * r2 * (s2 + sum_bsr) +
        (1.0 - alpha) * (1.0 - theta) / (alpha * theta) * ps * im2 * brd[k] * arma::accu(arma::square(ssr) % srd) +
        (1.0 - alpha) * (1.0 - theta) / (alpha * theta) * ps * im2 * brd[k] * cross * sum_bsr +
        (1.0 - theta) / theta * dest_noise_norm;
  }

  b.finalize(config);

  // rescale the reported terms back to their raw magnitudes; the SINR was
  // already formed from the normalized values
  const double m4 = m * m * m * m;
  for (arma::vec* v : {&b.desired, &b.estimation, &b.interpair, &b.loop, &b.relay_noise,
                       &b.relay_quant, &b.dest_noise, &b.dest_quant}) {
    *v *= m4;
  }
  return b;
}

RateBreakdown exact_rate(const SystemConfig& config) { return exact_breakdown(config); }

}  // namespace fdrelay
