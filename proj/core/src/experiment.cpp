// SPDX-License-Identifier: Apache-2.0
//
// fdrelay — rate analysis for full-duplex massive MIMO AF relaying
// with low-resolution ADCs
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "fdrelay/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "fdrelay/config_io.hpp"
#include "fdrelay/rate_asym.hpp"
#include "fdrelay/rate_exact.hpp"
#include "fdrelay/units.hpp"

namespace fdrelay {
namespace {

constexpr OutputKind kKindOrder[] = {OutputKind::kExact, OutputKind::kApprox,
                                     OutputKind::kMc, OutputKind::kLimit,
                                     OutputKind::kHalfDuplex};

bool is_integer_axis(const std::string& axis) {
  return axis == "M" || axis == "K" || axis == "relay_bits" || axis == "dest_bits";
}

bool is_known_axis(const std::string& axis) {
  static const char* names[] = {"M",   "K",   "p_S",        "p_R",
                                "p_p", "sigma_LI2", "relay_bits", "dest_bits"};
  return std::find_if(std::begin(names), std::end(names), [&](const char* n) {
           return axis == n;
         }) != std::end(names);
}

}  // namespace

std::string to_string(OutputKind kind) {
  switch (kind) {
    case OutputKind::kExact: return "exact";
    case OutputKind::kApprox: return "approx";
    case OutputKind::kMc: return "mc";
    case OutputKind::kLimit: return "limit";
    case OutputKind::kHalfDuplex: return "half_duplex";
  }
  return "?";
}

OutputKind output_kind_from_string(const std::string& name) {
  for (OutputKind k : kKindOrder) {
    if (name == to_string(k)) return k;
  }
  throw ConfigError("unknown output kind '" + name +
                    "' (expected exact|approx|mc|limit|half_duplex)");
}

void SweepSpec::validate() const {
  base.validate();
  if (!is_known_axis(axis)) {
    throw ConfigError("sweep: unknown axis '" + axis + "'");
  }
  if (values.empty()) {
    throw ConfigError("sweep: values must be non-empty");
  }
  if (values.size() > 1) {
    const bool increasing = values[1] > values[0];
    for (std::size_t i = 1; i < values.size(); ++i) {
      const bool step_up = values[i] > values[i - 1];
      if (values[i] == values[i - 1] || step_up != increasing) {
        throw ConfigError("sweep: values must be strictly monotone");
      }
    }
  }
  if (outputs.empty()) {
    throw ConfigError("sweep: at least one output kind is required");
  }
  if (is_integer_axis(axis)) {
    for (double v : values) {
      if (v != std::floor(v) || v < 1.0) {
        throw ConfigError("sweep: axis '" + axis + "' takes positive integers");
      }
    }
  }
  if (axis == "K") {
    if (base.pilot_symbols != base.user_pairs) {
      throw ConfigError("sweep: K axis requires tau_p == K in the base config");
    }
    if (arma::range(base.beta_sr) != 0.0 || arma::range(base.beta_rd) != 0.0) {
      throw ConfigError("sweep: K axis requires homogeneous large-scale gains");
    }
  }
  for (double v : values) {
    config_at(v).validate();
  }
}

SystemConfig SweepSpec::config_at(double value) const {
  SystemConfig c = base;
  if (axis == "M") {
    c.relay_antennas = static_cast<int>(value);
  } else if (axis == "K") {
    const int k = static_cast<int>(value);
    c.user_pairs = k;
    c.pilot_symbols = k;
    c.beta_sr = arma::vec(k, arma::fill::value(base.beta_sr[0]));
    c.beta_rd = arma::vec(k, arma::fill::value(base.beta_rd[0]));
  } else if (axis == "p_S") {
    c.source_power = value;
  } else if (axis == "p_R") {
    c.relay_power = value;
  } else if (axis == "p_p") {
    c.pilot_power = value;
  } else if (axis == "sigma_LI2") {
    c.loop_interference = value;
  } else if (axis == "relay_bits") {
    c.relay_adc = AdcModel::from_bits(static_cast<int>(value));
  } else if (axis == "dest_bits") {
    c.dest_adc = AdcModel::from_bits(static_cast<int>(value));
  }
  return c;
}

SweepResult run_sweep(const SweepSpec& spec, std::int64_t mc_n, std::uint64_t seed,
                      const std::string& csv_path) {
  spec.validate();
  if (spec.outputs.count(OutputKind::kMc) != 0 && mc_n < 100) {
    throw ConfigError("sweep: mc output needs mc_n >= 100");
  }

  int max_users = spec.base.user_pairs;
  if (spec.axis == "K") {
    for (double v : spec.values) {
      max_users = std::max(max_users, static_cast<int>(v));
    }
  }

  SweepResult result;
  CsvTable& t = result.table;
  t.header.push_back(spec.axis);
  std::vector<OutputKind> kinds;
  for (OutputKind k : kKindOrder) {
    if (spec.outputs.count(k) != 0) kinds.push_back(k);
  }
  for (OutputKind k : kinds) {
    t.header.push_back("sum_" + to_string(k));
  }
  for (OutputKind k : kinds) {
    for (int u = 1; u <= max_users; ++u) {
      t.header.push_back(to_string(k) + "_user" + std::to_string(u));
    }
  }
  const bool has_mc = spec.outputs.count(OutputKind::kMc) != 0;
  if (has_mc) {
    t.header.push_back("mc_se_sum");
    for (int u = 1; u <= max_users; ++u) {
      t.header.push_back("mc_se_user" + std::to_string(u));
    }
  }

  for (double v : spec.values) {
    std::vector<std::string> row(t.header.size());
    row[0] = is_integer_axis(spec.axis)
                 ? format_integer_cell(static_cast<long long>(v))
                 : format_cell(v);
    const SystemConfig c = spec.config_at(v);
    std::size_t sum_col = 1;
    std::size_t user_col = 1 + kinds.size();
    for (OutputKind k : kinds) {
      arma::vec per_user;
      bool unbounded = false;
      std::string error;
      try {
        switch (k) {
          case OutputKind::kExact:
            per_user = exact_rate(c).rate;
            break;
          case OutputKind::kApprox:
            per_user = approx_rate(c).rate;
            break;
          case OutputKind::kLimit: {
            const InfiniteAntennaLimit lim = limit_rate_infinite_M(c);
            unbounded = lim.unbounded;
            if (!unbounded) per_user = lim.rate;
            break;
          }
          case OutputKind::kHalfDuplex:
            per_user = half_duplex_rate(c);
            break;
          case OutputKind::kMc: {
            const McReport rep = simulate_report(c, mc_n, seed);
            per_user.set_size(c.user_pairs);
            for (int u = 0; u < c.user_pairs; ++u) per_user[u] = rep.rate[u].mean;
            // std errors live in the tail columns
            std::size_t se_col = 1 + kinds.size() + kinds.size() * max_users;
            row[se_col++] = format_cell(rep.sum_rate.std_error);
            for (int u = 0; u < c.user_pairs; ++u) {
              row[se_col + u] = format_cell(rep.rate[u].std_error);
            }
            break;
          }
        }
      } catch (const std::exception& e) {
        error = e.what();
        result.notes.push_back(spec.axis + "=" + format_cell(v) + " " + to_string(k) +
                               ": " + error);
      }
      if (error.empty()) {
        if (unbounded) {
          row[sum_col] = "inf";
          for (int u = 0; u < c.user_pairs; ++u) {
            row[user_col + u] = "inf";
          }
        } else if (per_user.n_elem > 0) {
          row[sum_col] = format_cell(arma::accu(per_user));
          for (arma::uword u = 0; u < per_user.n_elem; ++u) {
            row[user_col + u] = format_cell(per_user[u]);
          }
        }
      }
      ++sum_col;
      user_col += max_users;
    }
    t.rows.push_back(std::move(row));
  }

  // numeric mirror of the formatted cells
  result.values.reserve(t.rows.size());
  for (const auto& row : t.rows) {
    std::vector<std::optional<double>> vals;
    vals.reserve(row.size());
    for (const auto& cell : row) {
      if (cell.empty()) {
        vals.emplace_back(std::nullopt);
      } else if (cell == "inf") {
        vals.emplace_back(std::numeric_limits<double>::infinity());
      } else {
        vals.emplace_back(std::stod(cell));
      }
    }
    result.values.push_back(std::move(vals));
  }

  if (!csv_path.empty()) {
    write_csv(t, csv_path);
  }
  return result;
}

double validation_zscore(double closed_form, double mc_mean, double mc_se) {
  const double diff = mc_mean - closed_form;
  if (mc_se > 0.0) {
    return diff / mc_se;
  }
  const double scale = std::max({1.0, std::abs(closed_form), std::abs(mc_mean)});
  return std::abs(diff) <= 1e-12 * scale ? 0.0
                                         : std::numeric_limits<double>::infinity();
}

ValidationReport run_validation(const SystemConfig& config, std::int64_t mc_n,
                                std::uint64_t seed) {
  config.validate();
  if (mc_n < 1000) {
    throw ConfigError("validate: mc_n must be at least 1000");
  }
  const McTermReport mc = simulate_terms(config, mc_n, seed);
  const TermExpectations cf = term_expectations(config);

  ValidationReport rep;
  auto add = [&rep](const std::string& term, int user, double closed,
                    const McEstimate& est) {
    ValidationRow row;
    row.term = term;
    row.user = user;
    row.closed_form = closed;
    row.mc_mean = est.mean;
    row.mc_se = est.std_error;
    row.z = validation_zscore(closed, est.mean, est.std_error);
    rep.rows.push_back(row);
  };

  for (int k = 0; k < config.user_pairs; ++k) {
    add("desired_power", k + 1, cf.desired_power[k], mc.desired_power[k]);
    add("estimation_var", k + 1, cf.estimation_var[k], mc.estimation_var[k]);
    add("interpair", k + 1, cf.interpair[k], mc.interpair[k]);
    add("loop", k + 1, cf.loop[k], mc.loop[k]);
    add("relay_noise", k + 1, cf.relay_noise[k], mc.relay_noise[k]);
    add("relay_quant", k + 1, cf.relay_quant[k], mc.relay_quant[k]);
  }
  add("forward_norm", -1, cf.forward_norm, mc.forward_norm);
  add("loop_norm", -1, cf.loop_norm, mc.loop_norm);
  add("f_norm", -1, cf.f_norm, mc.f_norm);
  add("f_quant_norm", -1, cf.f_quant_norm, mc.f_quant_norm);

  rep.max_abs_z = 0.0;
  rep.pass = true;
  for (const auto& row : rep.rows) {
    rep.max_abs_z = std::max(rep.max_abs_z, std::abs(row.z));
    if (!(std::abs(row.z) <= 3.0)) rep.pass = false;
  }
  return rep;
}

std::string ValidationReport::text() const {
  std::ostringstream out;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-16s %5s %16s %16s %12s %8s\n", "term", "user",
                "closed_form", "mc_mean", "mc_se", "z");
  out << buf;
  for (const auto& r : rows) {
    const std::string user = r.user < 0 ? "-" : std::to_string(r.user);
    std::snprintf(buf, sizeof(buf), "%-16s %5s %16.8e %16.8e %12.4e %8.3f\n",
                  r.term.c_str(), user.c_str(), r.closed_form, r.mc_mean, r.mc_se,
                  r.z);
    out << buf;
  }
  std::snprintf(buf, sizeof(buf), "max |z| = %.3f -> %s\n", max_abs_z,
                pass ? "PASS" : "FAIL");
  out << buf;
  return out.str();
}

std::string to_string(DesignKind kind) {
  switch (kind) {
    case DesignKind::kOptimalRelayPower: return "optimal-relay-power";
    case DesignKind::kOptimizeRelayPower: return "optimize-relay-power";
    case DesignKind::kCrossoverLoopInterference: return "crossover-loop-interference";
    case DesignKind::kCrossoverAntennas: return "crossover-antennas";
    case DesignKind::kRequiredSourcePower: return "required-source-power";
    case DesignKind::kRequiredAntennas: return "required-antennas";
  }
  return "?";
}

DesignKind design_kind_from_string(const std::string& name) {
  for (DesignKind k :
       {DesignKind::kOptimalRelayPower, DesignKind::kOptimizeRelayPower,
        DesignKind::kCrossoverLoopInterference, DesignKind::kCrossoverAntennas,
        DesignKind::kRequiredSourcePower, DesignKind::kRequiredAntennas}) {
    if (name == to_string(k)) return k;
  }
  throw ConfigError("unknown design query '" + name + "'");
}

DesignResult run_design(const DesignQuery& query) {
  DesignResult res;
  res.kind = query.kind;
  try {
    switch (query.kind) {
      case DesignKind::kOptimalRelayPower:
        res.value = optimal_relay_power_homogeneous(query.config);
        res.is_power = true;
        break;
      case DesignKind::kOptimizeRelayPower:
        res.value = optimize_relay_power(query.config, query.bracket);
        res.is_power = true;
        break;
      case DesignKind::kCrossoverLoopInterference:
        res.value = duplex_crossover_loop_interference(query.config, query.bracket);
        res.is_power = true;
        break;
      case DesignKind::kCrossoverAntennas:
        res.value = duplex_crossover_antennas(query.config, query.bracket);
        break;
      case DesignKind::kRequiredSourcePower: {
        PowerCoupling coupling;
        if (query.coupling_factor.has_value()) {
          coupling = [f = *query.coupling_factor](double ps) { return f * ps; };
        }
        res.value = required_source_power(query.config, query.target_sum_rate,
                                          query.bracket, coupling);
        res.is_power = true;
        break;
      }
      case DesignKind::kRequiredAntennas:
        res.value = required_antennas(query.config, query.target_sum_rate,
                                      query.max_antennas);
        break;
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  } catch (const std::runtime_error& e) {
    throw EvaluationError(e.what());
  }
  return res;
}

std::string DesignResult::text() const {
  char buf[128];
  if (is_power) {
    std::snprintf(buf, sizeof(buf), "%s: %.10g linear = %.4f dB",
                  to_string(kind).c_str(), value, to_db(value));
  } else {
    std::snprintf(buf, sizeof(buf), "%s: %lld", to_string(kind).c_str(),
                  static_cast<long long>(std::llround(value)));
  }
  return buf;
}

void append_design_csv(const DesignResult& result, const std::string& path) {
  const bool exists = std::filesystem::exists(path);
  std::ofstream out(path, std::ios::app);
  if (!out) {
    throw EvaluationError("cannot open " + path);
  }
  if (!exists) {
    out << "query,value,value_db\n";
  }
  out << to_string(result.kind) << ',' << format_cell(result.value) << ',';
  if (result.is_power) {
    out << format_cell(to_db(result.value));
  }
  out << '\n';
}

}  // namespace fdrelay
