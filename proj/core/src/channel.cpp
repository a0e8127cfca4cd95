// SPDX-License-Identifier: Apache-2.0
//
// fdrelay — rate analysis for full-duplex massive MIMO AF relaying
// with low-resolution ADCs
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "fdrelay/channel.hpp"

#include <stdexcept>

#include "fdrelay/adc.hpp"

namespace fdrelay {

ChannelSet draw_channels(const SystemConfig& config, RandomStream& rng) {
  config.validate();
  const int m = config.relay_antennas;
  const int k = config.user_pairs;

  ChannelSet ch;
  ch.g_sr.set_size(m, k);
  ch.g_rd.set_size(m, k);
  ch.g_rr.set_size(m, m);
  // draw order is part of the reproducibility contract: g_sr, g_rd, g_rr
  rng.fill_complex_normal_columns(ch.g_sr, config.beta_sr);
  rng.fill_complex_normal_columns(ch.g_rd, config.beta_rd);
  rng.fill_complex_normal(ch.g_rr, config.loop_interference);
  return ch;
}

EstimationStats estimation_stats(const SystemConfig& config) {
  config.validate();
  const double alpha = config.relay_adc.rho;
  const double tp = static_cast<double>(config.pilot_symbols) * config.pilot_power;

  auto stats = [&](const arma::vec& beta, arma::vec& est_var, arma::vec& err_var) {
    est_var = alpha * tp * arma::square(beta) / (1.0 + tp * beta);
    err_var = beta - est_var;
  };

  EstimationStats s;
  stats(config.beta_sr, s.est_var_sr, s.err_var_sr);
  stats(config.beta_rd, s.est_var_rd, s.err_var_rd);
  return s;
}

namespace {

// One hop of quantized training: observe sqrt(tau_p*p_p)*G + N through the
// relay ADCs, then scale column k by the MMSE coefficient
// sqrt(tau_p*p_p)*beta_k / (1 + tau_p*p_p*beta_k).
void estimate_hop(const arma::cx_mat& g, const arma::vec& beta, double tp, double alpha,
                  RandomStream& rng, arma::cx_mat& est, arma::cx_mat& err) {
  const arma::uword m = g.n_rows;
  const arma::uword k = g.n_cols;

  arma::cx_mat noise(m, k);
  rng.fill_complex_normal(noise, 1.0);

  est.set_size(m, k);
  const double root_tp = std::sqrt(tp);
  for (arma::uword c = 0; c < k; ++c) {
    arma::cx_vec column = root_tp * g.col(c) + noise.col(c);
    // per-element model power of this pilot column
    const arma::vec power(m, arma::fill::value(tp * beta[c] + 1.0));
    QuantizedVector q = aqnm_transform(column, alpha, power, rng);
    est.col(c) = (root_tp * beta[c] / (1.0 + tp * beta[c])) * q.output;
  }
  err = g - est;
}

}  // namespace

ChannelEstimate simulate_pilot_estimation(const ChannelSet& channels,
                                          const SystemConfig& config,
                                          RandomStream& rng) {
  config.validate();
  if (config.pilot_symbols != config.user_pairs) {
    throw std::invalid_argument(
        "simulate_pilot_estimation: identity pilots require tau_p == K");
  }
  const double tp = static_cast<double>(config.pilot_symbols) * config.pilot_power;
  const double alpha = config.relay_adc.rho;

  ChannelEstimate est;
  estimate_hop(channels.g_sr, config.beta_sr, tp, alpha, rng, est.est_sr, est.err_sr);
  estimate_hop(channels.g_rd, config.beta_rd, tp, alpha, rng, est.est_rd, est.err_rd);
  return est;
}

BilinearForms::BilinearForms(const ChannelEstimate& est, const ChannelSet& channels) {
  const arma::uword m = channels.g_sr.n_rows;
  const arma::uword k = channels.g_sr.n_cols;
  if (est.est_sr.n_rows != m || est.est_sr.n_cols != k ||
      est.est_rd.n_rows != m || est.est_rd.n_cols != k ||
      channels.g_rd.n_rows != m || channels.g_rd.n_cols != k ||
      channels.g_rr.n_rows != m || channels.g_rr.n_cols != m) {
    throw std::invalid_argument("BilinearForms: dimension mismatch");
  }

  est_sr_ = est.est_sr;
  gram_est_sr_ = est.est_sr.t() * est.est_sr;
  gram_est_rd_ = est.est_rd.t() * est.est_rd;
  rx_ = channels.g_rd.st() * arma::conj(est.est_rd);

  const arma::cx_mat fwd = est.est_sr.t() * channels.g_sr;  // Ghat_SR^H G_SR
  pair_ = rx_ * fwd;

  const arma::cx_mat loop_fwd = est.est_sr.t() * channels.g_rr;  // K x M
  loop_gram_ = loop_fwd * loop_fwd.t();

  const arma::cx_mat bs = arma::conj(gram_est_rd_) * fwd;
  f_gsr_norm2_ = std::real(arma::accu(arma::conj(fwd) % bs));
  f_grr_norm2_ = std::real(arma::accu(arma::conj(gram_est_rd_) % loop_gram_.st()));
  f_norm2_ = std::real(arma::accu(arma::conj(gram_est_rd_) % gram_est_sr_.st()));
}

double BilinearForms::receive_row_norm2(int k) const {
  return std::real(arma::as_scalar(rx_.row(k) * gram_est_sr_ * rx_.row(k).t()));
}

double BilinearForms::loop_row_norm2(int k) const {
  return std::real(arma::as_scalar(rx_.row(k) * loop_gram_ * rx_.row(k).t()));
}

double BilinearForms::weighted_receive_row_norm2(int k, const arma::vec& weight) const {
  if (weight.n_elem != est_sr_.n_rows) {
    throw std::invalid_argument("BilinearForms: weight length must equal M");
  }
  // (g_RD,k^T F)^T = conj(Ghat_SR) * rx_row_k^T
  const arma::cx_vec row = arma::conj(est_sr_) * rx_.row(k).st();
  double acc = 0.0;
  for (arma::uword i = 0; i < row.n_elem; ++i) {
    acc += weight[i] * std::norm(row[i]);
  }
  return acc;
}

double BilinearForms::weighted_f_norm2(const arma::vec& weight) const {
  if (weight.n_elem != est_sr_.n_rows) {
    throw std::invalid_argument("BilinearForms: weight length must equal M");
  }
  const arma::cx_mat scaled = est_sr_.each_col() % arma::conv_to<arma::cx_vec>::from(weight);
  const arma::cx_mat p = est_sr_.t() * scaled;  // Ghat_SR^H diag(w) Ghat_SR
  return std::real(arma::accu(arma::conj(gram_est_rd_) % p.st()));
}

BilinearForms mrc_mrt_products(const ChannelEstimate& est, const ChannelSet& channels) {
  return BilinearForms(est, channels);
}

}  // namespace fdrelay
