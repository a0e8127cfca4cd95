// SPDX-License-Identifier: Apache-2.0
//
// fdrelay — rate analysis for full-duplex massive MIMO AF relaying
// with low-resolution ADCs
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "fdrelay/mc_oracle.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "fdrelay/channel.hpp"
#include "fdrelay/rate_exact.hpp"
#include "fdrelay/rng.hpp"

namespace fdrelay {
namespace {

// realizations per jackknife batch boundary; batches also fix the pooling
// granularity of the canonical walk
int batch_count_for(std::int64_t n) {
  if (n >= 1000) return 100;
  if (n >= 200) return 10;
  return 1;
}

arma::vec row_power_sums(const arma::cx_mat& m) {
  arma::vec acc(m.n_rows, arma::fill::zeros);
  for (arma::uword c = 0; c < m.n_cols; ++c) {
    const std::complex<double>* p = m.colptr(c);
    for (arma::uword r = 0; r < m.n_rows; ++r) {
      acc[r] += std::norm(p[r]);
    }
  }
  return acc;
}

McEstimate mean_se(long double sum, long double sum_sq, std::int64_t n) {
  const double mean = static_cast<double>(sum / n);
  double var = 0.0;
  if (n > 1) {
    var = static_cast<double>((sum_sq - sum * sum / n) / (n - 1));
    var = std::max(var, 0.0);
  }
  return {mean, std::sqrt(var / n), n};
}

}  // namespace

McPartialSums::McPartialSums(int users_, std::int64_t /*first*/, std::int64_t count_)
    : users(users_), count(count_) {
  const auto k = static_cast<std::size_t>(users_);
  for (auto* v : {&x_re, &x_im, &x2_re, &x2_im, &abs_x2, &abs_x4, &absx2_x_re,
                  &absx2_x_im, &inter, &inter2, &loop, &loop2, &relay_noise,
                  &relay_noise2, &relay_quant, &relay_quant2}) {
    v->assign(k, 0.0L);
  }
}

McPartialSums& McPartialSums::operator+=(const McPartialSums& other) {
  if (users == 0) {
    *this = other;
    return *this;
  }
  if (other.users != users) {
    throw std::invalid_argument("McPartialSums: pooling mismatched user counts");
  }
  count += other.count;
  auto add = [](std::vector<long double>& a, const std::vector<long double>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  };
  add(x_re, other.x_re); add(x_im, other.x_im);
  add(x2_re, other.x2_re); add(x2_im, other.x2_im);
  add(abs_x2, other.abs_x2); add(abs_x4, other.abs_x4);
  add(absx2_x_re, other.absx2_x_re); add(absx2_x_im, other.absx2_x_im);
  add(inter, other.inter); add(inter2, other.inter2);
  add(loop, other.loop); add(loop2, other.loop2);
  add(relay_noise, other.relay_noise); add(relay_noise2, other.relay_noise2);
  add(relay_quant, other.relay_quant); add(relay_quant2, other.relay_quant2);
  fwd += other.fwd; fwd2 += other.fwd2;
  loopn += other.loopn; loopn2 += other.loopn2;
  fn += other.fn; fn2 += other.fn2;
  fq += other.fq; fq2 += other.fq2;
  gden += other.gden; gden2 += other.gden2;
  return *this;
}

McPartialSums simulate_terms_partial(const SystemConfig& config, std::int64_t first,
                                     std::int64_t count, std::uint64_t seed) {
  config.validate();
  const int nk = config.user_pairs;
  const double m = config.relay_antennas;
  const double alpha = config.relay_adc.rho;
  const double aq = alpha * (1.0 - alpha);

  McPartialSums s(nk, first, count);
  for (std::int64_t r = first; r < first + count; ++r) {
    RandomStream rng(seed, static_cast<std::uint64_t>(r));
    const ChannelSet ch = draw_channels(config, rng);
    const ChannelEstimate est = simulate_pilot_estimation(ch, config, rng);
    const BilinearForms bf(est, ch);

    // per-antenna input power at the relay, conditioned on the realization
    arma::vec d = config.source_power * row_power_sums(ch.g_sr) + 1.0;
    if (config.loop_interference > 0.0) {
      d += (config.relay_power / m) * row_power_sums(ch.g_rr);
    }

    for (int k = 0; k < nk; ++k) {
      const std::complex<double> x = bf.pair_gain(k, k);
      const std::complex<double> x2 = x * x;
      const double ax2 = std::norm(x);
      s.x_re[k] += x.real(); s.x_im[k] += x.imag();
      s.x2_re[k] += x2.real(); s.x2_im[k] += x2.imag();
      s.abs_x2[k] += ax2;
      s.abs_x4[k] += ax2 * ax2;
      s.absx2_x_re[k] += ax2 * x.real();
      s.absx2_x_im[k] += ax2 * x.imag();

      double ip = 0.0;
      for (int j = 0; j < nk; ++j) {
        if (j != k) ip += std::norm(bf.pair_gain(k, j));
      }
      s.inter[k] += ip; s.inter2[k] += ip * ip;

      const double lp = bf.loop_row_norm2(k);
      s.loop[k] += lp; s.loop2[k] += lp * lp;

      const double rn = bf.receive_row_norm2(k);
      s.relay_noise[k] += rn; s.relay_noise2[k] += rn * rn;

      const double qn = aq == 0.0 ? 0.0 : aq * bf.weighted_receive_row_norm2(k, d);
      s.relay_quant[k] += qn; s.relay_quant2[k] += qn * qn;
    }

    const double fwd = bf.forward_norm2();
    const double lo = bf.loop_norm2();
    const double fn = bf.f_norm2();
    const double fq = aq == 0.0 ? 0.0 : aq * bf.weighted_f_norm2(d);
    s.fwd += fwd; s.fwd2 += fwd * fwd;
    s.loopn += lo; s.loopn2 += lo * lo;
    s.fn += fn; s.fn2 += fn * fn;
    s.fq += fq; s.fq2 += fq * fq;
    const double den = alpha * alpha *
                           (config.source_power * fwd +
                            config.relay_power / m * lo + fn) +
                       fq;
    s.gden += den; s.gden2 += den * den;
  }
  return s;
}

McPartialSums pool_partial_sums(std::span<const McPartialSums> parts) {
  McPartialSums pooled;
  for (const auto& p : parts) pooled += p;
  return pooled;
}

McTermReport finalize_terms(const SystemConfig& config, const McPartialSums& s) {
  const std::int64_t n = s.count;
  if (n < 2) {
    throw std::invalid_argument("finalize_terms: need at least 2 realizations");
  }
  McTermReport rep;
  rep.realizations = n;
  const int nk = config.user_pairs;
  rep.desired_power.resize(nk);
  rep.estimation_var.resize(nk);
  rep.interpair.resize(nk);
  rep.loop.resize(nk);
  rep.relay_noise.resize(nk);
  rep.relay_quant.resize(nk);

  for (int k = 0; k < nk; ++k) {
    const double mr = static_cast<double>(s.x_re[k] / n);
    const double mi = static_cast<double>(s.x_im[k] / n);
    const double c = mr * mr + mi * mi;
    const double sum_abs2 = static_cast<double>(s.abs_x2[k]);

    // second moments of the real/imaginary parts from |x|^2 and x^2 sums
    const double sum_re2 = 0.5 * (sum_abs2 + static_cast<double>(s.x2_re[k]));
    const double sum_im2 = 0.5 * (sum_abs2 - static_cast<double>(s.x2_re[k]));
    const double sum_reim = 0.5 * static_cast<double>(s.x2_im[k]);
    const double var_re = std::max(sum_re2 / n - mr * mr, 0.0);
    const double var_im = std::max(sum_im2 / n - mi * mi, 0.0);
    const double cov = sum_reim / n - mr * mi;
    // delta method for |mean|^2
    const double var_power =
        (4.0 * mr * mr * var_re + 4.0 * mi * mi * var_im + 8.0 * mr * mi * cov) / n;
    rep.desired_power[k] = {c, std::sqrt(std::max(var_power, 0.0)), n};

    const double v = std::max(
        (sum_abs2 - n * c) / static_cast<double>(n - 1), 0.0);
    // centered fourth moment from raw sums
    const std::complex<double> mean(mr, mi);
    const std::complex<double> sum_x2(static_cast<double>(s.x2_re[k]),
                                      static_cast<double>(s.x2_im[k]));
    const std::complex<double> sum_ax2x(static_cast<double>(s.absx2_x_re[k]),
                                        static_cast<double>(s.absx2_x_im[k]));
    const double m4 = static_cast<double>(s.abs_x4[k]) -
                      4.0 * std::real(std::conj(mean) * sum_ax2x) +
                      4.0 * c * sum_abs2 +
                      2.0 * std::real(std::conj(mean) * std::conj(mean) * sum_x2) -
                      3.0 * n * c * c;
    const double var_of_sq = std::max(m4 / n - v * v, 0.0);
    rep.estimation_var[k] = {v, std::sqrt(var_of_sq / n), n};

    rep.interpair[k] = mean_se(s.inter[k], s.inter2[k], n);
    rep.loop[k] = mean_se(s.loop[k], s.loop2[k], n);
    rep.relay_noise[k] = mean_se(s.relay_noise[k], s.relay_noise2[k], n);
    rep.relay_quant[k] = mean_se(s.relay_quant[k], s.relay_quant2[k], n);
  }

  rep.forward_norm = mean_se(s.fwd, s.fwd2, n);
  rep.loop_norm = mean_se(s.loopn, s.loopn2, n);
  rep.f_norm = mean_se(s.fn, s.fn2, n);
  rep.f_quant_norm = mean_se(s.fq, s.fq2, n);
  return rep;
}

TermExpectations term_expectations(const SystemConfig& config) {
  config.validate();
  const EstimationStats st = estimation_stats(config);
  const RateBreakdown b = exact_breakdown(config);
  const double m = config.relay_antennas;
  const double alpha = config.relay_adc.rho;
  const double cross = arma::accu(st.est_var_sr % st.est_var_rd);
  const double fwd4 = arma::accu(arma::square(st.est_var_sr) % st.est_var_rd);
  const double sum_bsr = arma::accu(config.beta_sr);

  TermExpectations e;
  e.desired_power = b.desired / config.source_power;
  e.estimation_var = b.estimation / config.source_power;
  e.interpair = b.interpair / config.source_power;
  e.relay_noise = b.relay_noise;
  e.relay_quant = alpha * alpha * b.relay_quant;
  e.loop.set_size(config.user_pairs);
  for (int k = 0; k < config.user_pairs; ++k) {
    e.loop[k] = config.loop_interference * m * m * m *
                (m * st.est_var_sr[k] * st.est_var_rd[k] * st.est_var_rd[k] +
                 config.beta_rd[k] * cross);
  }
  e.forward_norm = m * m * m * fwd4 + m * m * cross * sum_bsr;
  e.loop_norm = m * m * m * config.loop_interference * cross;
  e.f_norm = m * m * cross;
  e.f_quant_norm =
      alpha * (1.0 - alpha) * m * m *
      (config.source_power * (fwd4 + sum_bsr * cross) +
       cross * (config.relay_power * config.loop_interference + 1.0));
  return e;
}

namespace {

struct RateInputs {
  arma::vec desired, estimation, interpair, loop, relay_noise, relay_quant;
};

// assemble the per-user rate from term sums plus the closed-form noise floors
arma::vec rate_from_sums(const SystemConfig& config, const McPartialSums& s,
                         const arma::vec& dest_noise, const arma::vec& dest_quant) {
  const std::int64_t n = s.count;
  const double m = config.relay_antennas;
  const double alpha = config.relay_adc.rho;
  arma::vec rate(config.user_pairs);
  for (int k = 0; k < config.user_pairs; ++k) {
    const double mr = static_cast<double>(s.x_re[k] / n);
    const double mi = static_cast<double>(s.x_im[k] / n);
    const double power = mr * mr + mi * mi;
    const double var = std::max(static_cast<double>(s.abs_x2[k] / n) - power, 0.0);
    const double a = config.source_power * power;
    const double denom = config.source_power * var +
                         config.source_power * static_cast<double>(s.inter[k] / n) +
                         config.relay_power / m * static_cast<double>(s.loop[k] / n) +
                         static_cast<double>(s.relay_noise[k] / n) +
                         static_cast<double>(s.relay_quant[k] / n) / (alpha * alpha) +
                         dest_noise[k] + dest_quant[k];
    rate[k] = config.prelog() * std::log1p(a / denom) / std::numbers::ln2;
  }
  return rate;
}

}  // namespace

McReport simulate_report(const SystemConfig& config, std::int64_t n, std::uint64_t seed) {
  config.validate();
  if (n < 100) {
    throw std::invalid_argument("simulate_report: need n >= 100 realizations");
  }
  const int batches = batch_count_for(n);
  std::vector<McPartialSums> parts;
  parts.reserve(batches);
  for (int b = 0; b < batches; ++b) {
    const std::int64_t lo = n * b / batches;
    const std::int64_t hi = n * (b + 1) / batches;
    parts.push_back(simulate_terms_partial(config, lo, hi - lo, seed));
  }
  McPartialSums total = pool_partial_sums(parts);

  McReport rep;
  rep.terms = finalize_terms(config, total);

  // amplification factor by the delta method on the constraint denominator
  const McEstimate den = mean_se(total.gden, total.gden2, n);
  const double gain = std::sqrt(config.relay_power / den.mean);
  rep.gain = {gain, gain * den.std_error / (2.0 * den.mean), n};

  // noise floors from the closed forms (they depend only on the deterministic
  // amplification factor and the ADC levels)
  const RateBreakdown cf = exact_breakdown(config);
  const arma::vec rate = rate_from_sums(config, total, cf.dest_noise, cf.dest_quant);

  // delete-one-batch jackknife
  arma::mat jack(config.user_pairs, batches);
  arma::vec jack_sum(batches);
  for (int b = 0; b < batches; ++b) {
    McPartialSums rest;
    for (int o = 0; o < batches; ++o) {
      if (o != b) rest += parts[o];
    }
    const arma::vec rb = rate_from_sums(config, rest, cf.dest_noise, cf.dest_quant);
    jack.col(b) = rb;
    jack_sum[b] = arma::accu(rb);
  }
  rep.rate.resize(config.user_pairs);
  const double jf = static_cast<double>(batches - 1) / batches;
  for (int k = 0; k < config.user_pairs; ++k) {
    const arma::rowvec row = jack.row(k);
    const double mu = arma::mean(row);
    const double se = batches > 1 ? std::sqrt(jf * arma::accu(arma::square(row - mu))) : 0.0;
    rep.rate[k] = {rate[k], se, n};
  }
  const double mu = arma::mean(jack_sum);
  rep.sum_rate = {arma::accu(rate),
                  batches > 1 ? std::sqrt(jf * arma::accu(arma::square(jack_sum - mu))) : 0.0,
                  n};
  return rep;
}

McTermReport simulate_terms(const SystemConfig& config, std::int64_t n, std::uint64_t seed) {
  if (n < 100) {
    throw std::invalid_argument("simulate_terms: need n >= 100 realizations");
  }
  const int batches = batch_count_for(n);
  std::vector<McPartialSums> parts;
  parts.reserve(batches);
  for (int b = 0; b < batches; ++b) {
    const std::int64_t lo = n * b / batches;
    const std::int64_t hi = n * (b + 1) / batches;
    parts.push_back(simulate_terms_partial(config, lo, hi - lo, seed));
  }
  return finalize_terms(config, pool_partial_sums(parts));
}

McEstimate simulate_gamma(const SystemConfig& config, std::int64_t n, std::uint64_t seed) {
  if (n < 100) {
    throw std::invalid_argument("simulate_gamma: need n >= 100 realizations");
  }
  return simulate_report(config, n, seed).gain;
}

std::vector<McEstimate> simulate_rate(const SystemConfig& config, std::int64_t n,
                                      std::uint64_t seed) {
  if (n < 100) {
    throw std::invalid_argument("simulate_rate: need n >= 100 realizations");
  }
  return simulate_report(config, n, seed).rate;
}

}  // namespace fdrelay
