// SPDX-License-Identifier: Apache-2.0
//
// fdrelay — rate analysis for full-duplex massive MIMO AF relaying
// with low-resolution ADCs
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "fdrelay/design.hpp"

#include <cmath>
#include <stdexcept>

#include "fdrelay/rate_asym.hpp"
#include "fdrelay/rate_exact.hpp"

namespace fdrelay {
namespace {

void check_bracket(const SearchBracket& b) {
  if (!(b.lo > 0.0) || !(b.lo < b.hi)) {
    throw std::invalid_argument("SearchBracket: need 0 < lo < hi");
  }
  if (!(b.tol > 0.0)) {
    throw std::invalid_argument("SearchBracket: tol must be positive");
  }
}

double approx_sum_rate_at_pr(const SystemConfig& config, double pr) {
  SystemConfig c = config;
  c.relay_power = pr;
  return arma::accu(approx_rate(c).rate);
}

double fd_hd_gap_at_sli(const SystemConfig& config, double sli) {
  SystemConfig c = config;
  c.loop_interference = sli;
  return arma::accu(approx_rate(c).rate) - arma::accu(half_duplex_rate(c));
}

double fd_hd_gap_at_m(const SystemConfig& config, int m) {
  SystemConfig c = config;
  c.relay_antennas = m;
  return arma::accu(approx_rate(c).rate) - arma::accu(half_duplex_rate(c));
}

}  // namespace

double optimal_relay_power_homogeneous(const SystemConfig& config) {
  config.validate();
  if (!config.homogeneous_unit_gains()) {
    throw std::invalid_argument(
        "optimal_relay_power_homogeneous: requires beta_SR = beta_RD = 1");
  }
  if (config.loop_interference <= 0.0) {
    throw std::invalid_argument(
        "optimal_relay_power_homogeneous: optimum unbounded for sigma_LI2 = 0");
  }
  return std::sqrt(config.relay_adc.rho * config.source_power * config.user_pairs /
                   config.loop_interference);
}

double optimize_relay_power(const SystemConfig& config, const SearchBracket& bracket,
                            bool* unimodal_flag) {
  config.validate();
  check_bracket(bracket);

  const double lo = std::log(bracket.lo);
  const double hi = std::log(bracket.hi);
  auto objective = [&](double t) { return approx_sum_rate_at_pr(config, std::exp(t)); };

  if (unimodal_flag != nullptr) {
    // coarse scan for extra local maxima
    constexpr int kScan = 65;
    double prev = objective(lo);
    double cur = objective(lo + (hi - lo) / (kScan - 1));
    int maxima = 0;
    for (int i = 2; i < kScan; ++i) {
      const double next = objective(lo + i * (hi - lo) / (kScan - 1));
      if (cur >= prev && cur > next) ++maxima;
      prev = cur;
      cur = next;
    }
    *unimodal_flag = maxima <= 1;
  }

  const double f_lo = objective(lo);
  const double f_hi = objective(hi);
  const double f_mid = objective(0.5 * (lo + hi));
  if (f_mid < f_lo && f_mid < f_hi) {
    throw std::runtime_error("optimize_relay_power: no interior maximum in bracket");
  }

  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = objective(c);
  double fd = objective(d);
  while (b - a > bracket.tol) {
    if (fc > fd) {
      b = d; d = c; fd = fc;
      c = b - kInvPhi * (b - a);
      fc = objective(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + kInvPhi * (b - a);
      fd = objective(d);
    }
  }
  return std::exp(0.5 * (a + b));
}

double duplex_crossover_loop_interference(const SystemConfig& config,
                                          const SearchBracket& bracket) {
  config.validate();
  check_bracket(bracket);
  double lo = bracket.lo, hi = bracket.hi;
  double g_lo = fd_hd_gap_at_sli(config, lo);
  const double g_hi = fd_hd_gap_at_sli(config, hi);
  if (g_lo == 0.0) return lo;
  if (g_hi == 0.0) return hi;
  if ((g_lo > 0.0) == (g_hi > 0.0)) {
    throw std::runtime_error(
        "duplex_crossover_loop_interference: modes do not cross in bracket");
  }
  double mid = std::sqrt(lo * hi);
  double g_mid = fd_hd_gap_at_sli(config, mid);
  for (int iter = 0;
       (hi / lo - 1.0 > bracket.tol || std::abs(g_mid) > bracket.tol) && iter < 400;
       ++iter) {
    if ((g_mid > 0.0) == (g_lo > 0.0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
    mid = std::sqrt(lo * hi);
    g_mid = fd_hd_gap_at_sli(config, mid);
  }
  return mid;
}

int duplex_crossover_antennas(const SystemConfig& config, const SearchBracket& bracket) {
  config.validate();
  check_bracket(bracket);
  int lo = std::max(1, static_cast<int>(std::llround(bracket.lo)));
  int hi = static_cast<int>(std::llround(bracket.hi));
  if (lo >= hi) {
    throw std::invalid_argument("duplex_crossover_antennas: integer bracket is empty");
  }
  const double g_lo = fd_hd_gap_at_m(config, lo);
  const double g_hi = fd_hd_gap_at_m(config, hi);
  if (g_lo >= 0.0 || g_hi < 0.0) {
    throw std::runtime_error("duplex_crossover_antennas: modes do not cross in bracket");
  }
  // smallest M with FD >= HD
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    if (fd_hd_gap_at_m(config, mid) >= 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double required_source_power(const SystemConfig& config, double target_sum_rate,
                             const SearchBracket& bracket, const PowerCoupling& coupling) {
  config.validate();
  check_bracket(bracket);
  if (!(target_sum_rate > 0.0)) {
    throw std::invalid_argument("required_source_power: target must be positive");
  }
  const PowerCoupling couple =
      coupling ? coupling
               : PowerCoupling([k = config.user_pairs](double ps) { return k * ps; });

  auto sum_rate_at = [&](double ps) {
    SystemConfig c = config;
    c.source_power = ps;
    c.relay_power = couple(ps);
    return arma::accu(approx_rate(c).rate);
  };

  // monotonicity check along a coarse scan of the bracket
  constexpr int kScan = 17;
  double prev = sum_rate_at(bracket.lo);
  for (int i = 1; i < kScan; ++i) {
    const double ps = bracket.lo * std::pow(bracket.hi / bracket.lo,
                                            static_cast<double>(i) / (kScan - 1));
    const double r = sum_rate_at(ps);
    if (r < prev * (1.0 - 1e-9)) {
      throw std::runtime_error(
          "required_source_power: sum rate is not monotone over the bracket");
    }
    prev = r;
  }
  if (sum_rate_at(bracket.hi) < target_sum_rate) {
    throw std::runtime_error("required_source_power: target unreachable in bracket");
  }
  if (sum_rate_at(bracket.lo) >= target_sum_rate) {
    return bracket.lo;
  }

  double lo = bracket.lo, hi = bracket.hi;
  while (hi / lo - 1.0 > bracket.tol) {
    const double mid = std::sqrt(lo * hi);
    if (sum_rate_at(mid) >= target_sum_rate) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

int required_antennas(const SystemConfig& config, double target_sum_rate,
                      int max_antennas) {
  config.validate();
  if (!(target_sum_rate > 0.0)) {
    throw std::invalid_argument("required_antennas: target must be positive");
  }
  if (max_antennas < 1) {
    throw std::invalid_argument("required_antennas: max_antennas must be >= 1");
  }
  auto sum_rate_at = [&](int m) {
    SystemConfig c = config;
    c.relay_antennas = m;
    return arma::accu(exact_rate(c).rate);
  };
  if (sum_rate_at(max_antennas) < target_sum_rate) {
    throw std::runtime_error("required_antennas: target unreachable by max_antennas");
  }
  if (sum_rate_at(1) >= target_sum_rate) return 1;
  int lo = 1, hi = max_antennas;  // rate at lo < target <= rate at hi
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    if (sum_rate_at(mid) >= target_sum_rate) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace fdrelay
