// SPDX-License-Identifier: Apache-2.0
//
// fdrelay — rate analysis for full-duplex massive MIMO AF relaying
// with low-resolution ADCs
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Test-only brute-force evaluation of the MRC/MRT bilinear forms with the
// relay matrix F materialized. Usable only for small instances; keeps the
// factorized production path honest.

#pragma once

#include <armadillo>

#include "fdrelay/channel.hpp"

namespace fdrelay::testing {

struct DenseForms {
  arma::cx_mat f;  // conj(Ghat_RD) * Ghat_SR^H, M x M

  DenseForms(const ChannelEstimate& est, const ChannelSet& ch)
      : f(arma::conj(est.est_rd) * est.est_sr.t()), ch_(&ch) {}

  std::complex<double> pair_gain(int k, int j) const {
    return arma::as_scalar(ch_->g_rd.col(k).st() * f * ch_->g_sr.col(j));
  }
  double receive_row_norm2(int k) const {
    const arma::cx_rowvec row = ch_->g_rd.col(k).st() * f;
    return std::real(arma::accu(row % arma::conj(row)));
  }
  double loop_row_norm2(int k) const {
    const arma::cx_rowvec row = ch_->g_rd.col(k).st() * f * ch_->g_rr;
    return std::real(arma::accu(row % arma::conj(row)));
  }
  double forward_norm2() const { return frob2(f * ch_->g_sr); }
  double loop_norm2() const { return frob2(f * ch_->g_rr); }
  double f_norm2() const { return frob2(f); }
  double weighted_receive_row_norm2(int k, const arma::vec& w) const {
    const arma::cx_rowvec row = ch_->g_rd.col(k).st() * f;
    double acc = 0.0;
    for (arma::uword i = 0; i < row.n_elem; ++i) acc += w[i] * std::norm(row[i]);
    return acc;
  }
  double weighted_f_norm2(const arma::vec& w) const {
    double acc = 0.0;
    for (arma::uword i = 0; i < f.n_cols; ++i) {
      acc += w[i] * std::real(arma::cdot(f.col(i), f.col(i)));
    }
    return acc;
  }

 private:
  static double frob2(const arma::cx_mat& m) {
    return std::real(arma::accu(m % arma::conj(m)));
  }
  const ChannelSet* ch_;
};

}  // namespace fdrelay::testing
