// SPDX-License-Identifier: Apache-2.0
//
// fdrelay — rate analysis for full-duplex massive MIMO AF relaying
// with low-resolution ADCs
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "fdrelay/rate_asym.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fdrelay/channel.hpp"

namespace fdrelay {
namespace {

constexpr double kThetaUnityGuard = 1.0 - 1e-12;

arma::vec rates_from_sinr(const arma::vec& sinr, double prelog) {
  arma::vec r(sinr.n_elem);
  for (arma::uword k = 0; k < sinr.n_elem; ++k) {
    r[k] = prelog * std::log1p(sinr[k]) / std::numbers::ln2;
  }
  return r;
}

// shared closed-form ingredients of the large-M terms
struct AsymParts {
  EstimationStats st;
  double cross;     // sum sigma^2_SR sigma^2_RD
  double fwd4;      // sum sigma^4_SR sigma^2_RD
  double sum_bsr;
  double sum_srd;
};

AsymParts parts_of(const SystemConfig& config) {
  AsymParts p;
  p.st = estimation_stats(config);
  p.cross = arma::accu(p.st.est_var_sr % p.st.est_var_rd);
  p.fwd4 = arma::accu(arma::square(p.st.est_var_sr) % p.st.est_var_rd);
  p.sum_bsr = arma::accu(config.beta_sr);
  p.sum_srd = arma::accu(p.st.est_var_rd);
  return p;
}

// destination-quantization term of user k; scale_ps doubles the data power
// for the half-duplex variant and include_loop drops the loop-interference
// contribution there
double dest_quant_term(const SystemConfig& config, const AsymParts& p, int k,
                       double ps, double pr, bool include_loop) {
  const double alpha = config.relay_adc.rho;
  const double theta = config.dest_adc.rho;
  if (theta == 1.0) return 0.0;
  const double s2 = p.st.est_var_sr[k], r2 = p.st.est_var_rd[k];
  const double m = config.relay_antennas;
  const double brd = config.beta_rd[k];
  const double loop_plus_noise =
      (include_loop ? config.relay_power * config.loop_interference : 0.0) + 1.0;
  const double q = (1.0 - theta) / theta;
  return q * ps * (m * s2 * r2 + s2 * brd / r2 * p.sum_srd) +
         q * ps * r2 * (p.sum_bsr + loop_plus_noise / (alpha * ps)) +
         (1.0 - alpha) * q / alpha * r2 * ps * (s2 + p.sum_bsr) +
         q * ps * p.fwd4 / (pr * s2 * r2);
}

}  // namespace

RateBreakdown approx_rate(const SystemConfig& config) {
  config.validate();
  const AsymParts p = parts_of(config);
  const int nk = config.user_pairs;
  const double m = config.relay_antennas;
  const double ps = config.source_power;
  const double pr = config.relay_power;
  const double sli = config.loop_interference;
  const double alpha = config.relay_adc.rho;
  const arma::vec& ssr = p.st.est_var_sr;
  const arma::vec& srd = p.st.est_var_rd;

  RateBreakdown b;
  b.gain = amplification_gain(config);
  b.desired.set_size(nk);
  b.estimation.set_size(nk);
  b.interpair.set_size(nk);
  b.loop.set_size(nk);
  b.relay_noise.set_size(nk);
  b.relay_quant.set_size(nk);
  b.dest_noise.set_size(nk);
  b.dest_quant.set_size(nk);

  for (int k = 0; k < nk; ++k) {
    const double s2 = ssr[k], r2 = srd[k];
    b.desired[k] = ps * m * s2 * r2;
    b.estimation[k] = ps * (config.beta_sr[k] * r2 + config.beta_rd[k] * s2);

    double inter = 0.0;
    for (int j = 0; j < nk; ++j) {
      if (j == k) continue;
      inter += r2 * config.beta_sr[j] +
               config.beta_rd[k] * ssr[j] * ssr[j] * srd[j] / (s2 * r2);
    }
    b.interpair[k] = ps * inter;

    b.loop[k] = pr * sli * r2;
    b.relay_noise[k] = r2;
    b.relay_quant[k] =
        (1.0 - alpha) / alpha * r2 * (ps * (s2 + p.sum_bsr) + pr * sli + 1.0);
    b.dest_noise[k] = ps * p.fwd4 / (pr * s2 * r2);
    b.dest_quant[k] = dest_quant_term(config, p, k, ps, pr, /*include_loop=*/true);
  }
  b.finalize(config);
  return b;
}

InfiniteAntennaLimit limit_rate_infinite_M(const SystemConfig& config) {
  config.validate();
  InfiniteAntennaLimit lim;
  const double theta = config.dest_adc.rho;
  if (theta > kThetaUnityGuard) {
    lim.unbounded = true;
    return lim;
  }
  const double sinr = theta / (1.0 - theta);
  lim.rate = rates_from_sinr(arma::vec(config.user_pairs, arma::fill::value(sinr)),
                             config.prelog());
  return lim;
}

arma::vec scaled_power_limit(const SystemConfig& config, double energy_source,
                             double energy_relay) {
  config.validate();
  if (!(energy_source > 0.0) || !(energy_relay > 0.0)) {
    throw std::invalid_argument("scaled_power_limit: energies must be positive");
  }
  const AsymParts p = parts_of(config);
  const double alpha = config.relay_adc.rho;
  const double theta = config.dest_adc.rho;

  arma::vec sinr(config.user_pairs);
  for (int k = 0; k < config.user_pairs; ++k) {
    const double s2 = p.st.est_var_sr[k], r2 = p.st.est_var_rd[k];
    sinr[k] = theta / (1.0 - theta + 1.0 / (alpha * energy_source * s2) +
                       p.fwd4 / (energy_relay * s2 * s2 * r2 * r2));
  }
  return rates_from_sinr(sinr, config.prelog());
}

PlacementRates placement_rates(const SystemConfig& config, double rho) {
  config.validate();
  if (!(rho > 0.0) || rho >= 1.0) {
    throw std::invalid_argument("placement_rates: rho must lie in (0, 1)");
  }

  PlacementRates out;

  SystemConfig relay_side = config;
  relay_side.relay_adc = AdcModel::from_rho(rho);
  relay_side.dest_adc = AdcModel::infinite_resolution();
  out.relay_only = approx_rate(relay_side).rate;

  // destination-side deployment: ideal relay ADCs, keep only the
  // destination-quantization contributions that survive at large M
  SystemConfig dest_side = config;
  dest_side.relay_adc = AdcModel::infinite_resolution();
  dest_side.dest_adc = AdcModel::from_rho(rho);
  const AsymParts p = parts_of(dest_side);
  const double ps = dest_side.source_power;
  const double pr = dest_side.relay_power;
  const double m = dest_side.relay_antennas;
  const double q = (1.0 - rho) / rho;

  arma::vec sinr(dest_side.user_pairs);
  for (int k = 0; k < dest_side.user_pairs; ++k) {
    const double s2 = p.st.est_var_sr[k], r2 = p.st.est_var_rd[k];
    const double brd = dest_side.beta_rd[k];
    double inter = 0.0;
    for (int j = 0; j < dest_side.user_pairs; ++j) {
      if (j == k) continue;
      inter += r2 * dest_side.beta_sr[j] +
               brd * p.st.est_var_sr[j] * p.st.est_var_sr[j] * p.st.est_var_rd[j] / (s2 * r2);
    }
    const double reduced_dest_quant =
        q * ps * (m * s2 * r2 + s2 * brd / r2 * p.sum_srd) +
        q * ps * r2 *
            (p.sum_bsr + (pr * dest_side.loop_interference + 1.0) / ps);
    const double denom = ps * (dest_side.beta_sr[k] * r2 + brd * s2) + ps * inter +
                         pr * dest_side.loop_interference * r2 + r2 +
                         ps * p.fwd4 / (pr * s2 * r2) + reduced_dest_quant;
    sinr[k] = ps * m * s2 * r2 / denom;
  }
  out.dest_only = rates_from_sinr(sinr, dest_side.prelog());
  return out;
}

arma::vec half_duplex_rate(const SystemConfig& config) {
  config.validate();
  const AsymParts p = parts_of(config);
  const double ps2 = 2.0 * config.source_power;  // energy-fair data powers
  const double pr2 = 2.0 * config.relay_power;
  const double alpha = config.relay_adc.rho;
  const arma::vec& ssr = p.st.est_var_sr;
  const arma::vec& srd = p.st.est_var_rd;

  arma::vec sinr(config.user_pairs);
  for (int k = 0; k < config.user_pairs; ++k) {
    const double s2 = ssr[k], r2 = srd[k];
    double inter = 0.0;
    for (int j = 0; j < config.user_pairs; ++j) {
      if (j == k) continue;
      inter += r2 * config.beta_sr[j] +
               config.beta_rd[k] * ssr[j] * ssr[j] * srd[j] / (s2 * r2);
    }
    const double desired = ps2 * config.relay_antennas * s2 * r2;
    const double estimation =
        ps2 * (config.beta_sr[k] * r2 + config.beta_rd[k] * s2);
    const double interpair = ps2 * inter;
    const double relay_noise = r2;
    const double relay_quant =
        (1.0 - alpha) / alpha * r2 * (ps2 * (s2 + p.sum_bsr) + 1.0);
    // the amplification penalty depends on the power ratio only, so the
    // doubling cancels
    const double dest_noise = config.source_power * p.fwd4 /
                              (config.relay_power * s2 * r2);
    const double dest_quant =
        dest_quant_term(config, p, k, ps2, pr2, /*include_loop=*/false);
    sinr[k] = desired / (estimation + interpair + relay_noise + relay_quant +
                         dest_noise + dest_quant);
  }
  return rates_from_sinr(sinr, 0.5 * config.prelog());
}

AsymptoticReport asymptotic_report(const SystemConfig& config, double energy_source,
                                   double energy_relay) {
  AsymptoticReport rep;
  rep.approx_breakdown = approx_rate(config);
  rep.limit_rate = limit_rate_infinite_M(config);
  rep.scaled_limit_rate = scaled_power_limit(config, energy_source, energy_relay);
  rep.hd_rate = half_duplex_rate(config);
  return rep;
}

}  // namespace fdrelay
