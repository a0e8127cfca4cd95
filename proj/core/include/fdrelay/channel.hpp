// SPDX-License-Identifier: Apache-2.0
//
// fdrelay — rate analysis for full-duplex massive MIMO AF relaying
// with low-resolution ADCs
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <complex>

#include <armadillo>

#include "fdrelay/rng.hpp"
#include "fdrelay/system_config.hpp"

namespace fdrelay {

// One channel realization. Column k of g_sr (g_rd) is CN(0, beta_sr[k] I)
// (CN(0, beta_rd[k] I)); g_rr is the residual self-interference channel with
// i.i.d. CN(0, sigma_LI^2) entries.
struct ChannelSet {
  arma::cx_mat g_sr;  // M x K, sources -> relay
  arma::cx_mat g_rd;  // M x K, relay -> destinations
  arma::cx_mat g_rr;  // M x M, residual loop channel
};

// MMSE channel estimates and their errors; g = est + err holds exactly
// by construction.
struct ChannelEstimate {
  arma::cx_mat est_sr, est_rd;  // M x K
  arma::cx_mat err_sr, err_rd;  // M x K
};

// Closed-form per-user training statistics: est_var is the variance of an
// MMSE-estimate entry, err_var of an error entry; est_var + err_var = beta.
struct EstimationStats {
  arma::vec est_var_sr, err_var_sr;  // sigma^2_SR,k and sigma~^2_SR,k
  arma::vec est_var_rd, err_var_rd;
};

ChannelSet draw_channels(const SystemConfig& config, RandomStream& rng);

EstimationStats estimation_stats(const SystemConfig& config);

// Synthesizes one quantized pilot phase per hop (identity pilot matrices,
// which requires tau_p == K) and applies the closed-form MMSE filter. The
// quantizer input power per pilot column is the model second moment
// tau_p*p_p*beta_k + 1, i.e. what the MMSE filter assumes, not the sample
// power of the drawn observation.
// Throws std::invalid_argument when tau_p != K.
ChannelEstimate simulate_pilot_estimation(const ChannelSet& channels,
                                          const SystemConfig& config,
                                          RandomStream& rng);

// Bilinear forms of the MRC/MRT relay matrix F = conj(Ghat_RD) Ghat_SR^H,
// evaluated through K-dimensional Gram factors. F itself (M x M) is never
// materialized; every quantity below costs at most O(K M^2) to prepare
// (the G_RR Gram) and O(K^2) to query.
class BilinearForms {
 public:
  BilinearForms(const ChannelEstimate& est, const ChannelSet& channels);

  int users() const { return static_cast<int>(pair_.n_rows); }

  // g_RD,k^T F g_SR,j
  std::complex<double> pair_gain(int k, int j) const { return pair_(k, j); }

  // ||g_RD,k^T F||^2
  double receive_row_norm2(int k) const;

  // ||g_RD,k^T F G_RR||^2
  double loop_row_norm2(int k) const;

  double forward_norm2() const { return f_gsr_norm2_; }  // ||F G_SR||^2
  double loop_norm2() const { return f_grr_norm2_; }     // ||F G_RR||^2
  double f_norm2() const { return f_norm2_; }            // ||F||^2

  // sum_i weight[i] * |(g_RD,k^T F)_i|^2
  double weighted_receive_row_norm2(int k, const arma::vec& weight) const;

  // sum_i weight[i] * ||F e_i||^2
  double weighted_f_norm2(const arma::vec& weight) const;

 private:
  arma::cx_mat est_sr_;     // kept for the weighted contractions
  arma::cx_mat gram_est_sr_;  // Ghat_SR^H Ghat_SR, K x K
  arma::cx_mat gram_est_rd_;  // Ghat_RD^H Ghat_RD, K x K
  arma::cx_mat rx_;           // G_RD^T conj(Ghat_RD), row k = combining weights of user k
  arma::cx_mat pair_;         // rx_ * (Ghat_SR^H G_SR), all pair gains
  arma::cx_mat loop_gram_;    // (Ghat_SR^H G_RR)(Ghat_SR^H G_RR)^H, K x K
  double f_gsr_norm2_ = 0.0;
  double f_grr_norm2_ = 0.0;
  double f_norm2_ = 0.0;
};

// The bilinear-form evaluator for the given realization and its estimate.
BilinearForms mrc_mrt_products(const ChannelEstimate& est, const ChannelSet& channels);

}  // namespace fdrelay
