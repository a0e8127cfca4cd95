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
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "fdrelay/config_io.hpp"
#include "fdrelay/csv.hpp"
#include "fdrelay/experiment.hpp"
#include "fdrelay/presets.hpp"
#include "fdrelay/rate_asym.hpp"
#include "fdrelay/rate_exact.hpp"
#include "fdrelay/rng.hpp"
#include "fdrelay/units.hpp"

using namespace fdrelay;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

constexpr const char* kFig3Json =
    R"({"M":64,"K":5,"p_S":"0dB","p_R":"10dB","p_p":"10dB","sigma_LI2":"0dB","relay_adc":2,"dest_adc":2})";

}  // namespace

TEST_CASE("config parsing") {
  SECTION("dB strings convert through the single rule") {
    const SystemConfig c = parse_config_text(kFig3Json);
    REQUIRE(c.source_power == 1.0);
    REQUIRE_THAT(c.relay_power, Catch::Matchers::WithinRel(10.0, 1e-12));
    REQUIRE(c.relay_adc.rho == 0.8825);
  }
  SECTION("defaults: coherence structure and unit gains") {
    const SystemConfig c = parse_config_text(
        R"({"M":64,"K":5,"tau_p":5,"p_S":1,"p_R":1,"p_p":1,"sigma_LI2":0.1,"relay_adc":"infinite","dest_adc":"infinite"})");
    REQUIRE(c.coherence_symbols == 196);
    REQUIRE_THAT(c.prelog(), Catch::Matchers::WithinRel(186.0 / 196.0, 1e-12));
    REQUIRE(c.beta_sr.n_elem == 5);
    REQUIRE(c.beta_sr.min() == 1.0);
  }
  SECTION("missing keys are named") {
    REQUIRE_THROWS_WITH(
        parse_config_text(R"({"M":64,"K":5,"p_S":1,"p_R":1,"p_p":1,"sigma_LI2":0.1,"relay_adc":2})"),
        Catch::Matchers::ContainsSubstring("dest_adc"));
  }
  SECTION("violated invariants are named") {
    REQUIRE_THROWS_WITH(
        parse_config_text(
            R"({"M":64,"K":5,"tau_c":9,"p_S":1,"p_R":1,"p_p":1,"sigma_LI2":0.1,"relay_adc":2,"dest_adc":2})"),
        Catch::Matchers::ContainsSubstring("tau_c"));
  }
  SECTION("unknown keys are rejected") {
    REQUIRE_THROWS_AS(
        parse_config_text(
            R"({"M":64,"K":5,"p_S":1,"p_R":1,"p_p":1,"sigma_LI2":0.1,"relay_adc":2,"dest_adc":2,"bogus":3})"),
        ConfigError);
  }
  SECTION("explicit gain vectors") {
    const SystemConfig c = parse_config_text(
        R"({"M":8,"K":2,"p_S":1,"p_R":1,"p_p":1,"sigma_LI2":0.1,"relay_adc":2,"dest_adc":2,"beta_SR":[2,0.5]})");
    REQUIRE(c.beta_sr[0] == 2.0);
    REQUIRE(c.beta_sr[1] == 0.5);
  }
  SECTION("overrides rewrite single fields") {
    std::string text = kFig3Json;
    apply_override(text, "M=128");
    apply_override(text, "p_S=-10dB");
    apply_override(text, "relay_adc=infinite");
    const SystemConfig c = parse_config_text(text);
    REQUIRE(c.relay_antennas == 128);
    REQUIRE_THAT(c.source_power, Catch::Matchers::WithinRel(0.1, 1e-12));
    REQUIRE(c.relay_adc.is_infinite());
  }
}

TEST_CASE("csv cells round-trip exactly") {
  CsvTable t;
  t.header = {"a", "b", "c"};
  RandomStream rng(2, 0);
  std::vector<std::vector<double>> expect;
  for (int r = 0; r < 20; ++r) {
    const double x = (rng.uniform() - 0.5) * std::pow(10.0, 300.0 * (rng.uniform() - 0.5));
    const double y = rng.normal();
    const double z = rng.uniform() * 1e-12;
    t.rows.push_back({format_cell(x), format_cell(y), format_cell(z)});
    expect.push_back({x, y, z});
  }
  const auto path = temp_file("fdrelay_csv_roundtrip.csv");
  write_csv(t, path.string());
  const ParsedCsv parsed = read_csv(path.string());
  REQUIRE(parsed.header == t.header);
  REQUIRE(parsed.values.size() == 20);
  for (int r = 0; r < 20; ++r) {
    for (int c = 0; c < 3; ++c) {
      REQUIRE(parsed.values[r][c].has_value());
      REQUIRE(*parsed.values[r][c] == expect[r][c]);
    }
  }
  std::filesystem::remove(path);
}

TEST_CASE("sweep evaluation") {
  SweepSpec spec;
  spec.base = parse_config_text(kFig3Json);
  spec.axis = "p_S";
  spec.values = {from_db(-10), from_db(0), from_db(10)};
  spec.outputs = {OutputKind::kExact, OutputKind::kApprox};

  SECTION("rows follow the axis and match direct evaluation") {
    const SweepResult res = run_sweep(spec, 0, 1);
    REQUIRE(res.table.rows.size() == 3);
    REQUIRE(res.table.header[0] == "p_S");
    REQUIRE(res.table.header[1] == "sum_exact");
    REQUIRE(res.table.header[2] == "sum_approx");
    SystemConfig c = spec.base;
    c.source_power = from_db(0);
    REQUIRE(*res.values[1][1] == exact_rate(c).sum_rate);
    REQUIRE(*res.values[1][2] == approx_rate(c).sum_rate);
  }
  SECTION("single-point sweep emits one row") {
    spec.values = {1.0};
    const SweepResult res = run_sweep(spec, 0, 1);
    REQUIRE(res.table.rows.size() == 1);
  }
  SECTION("non-monotone or empty values are rejected") {
    spec.values = {1.0, 3.0, 2.0};
    REQUIRE_THROWS_AS(run_sweep(spec, 0, 1), ConfigError);
    spec.values = {};
    REQUIRE_THROWS_AS(run_sweep(spec, 0, 1), ConfigError);
  }
  SECTION("written csv parses back to the exact values") {
    const auto path = temp_file("fdrelay_sweep.csv");
    const SweepResult res = run_sweep(spec, 0, 1, path.string());
    const ParsedCsv parsed = read_csv(path.string());
    REQUIRE(parsed.header == res.table.header);
    for (std::size_t r = 0; r < res.values.size(); ++r) {
      for (std::size_t c = 0; c < res.values[r].size(); ++c) {
        REQUIRE(parsed.values[r][c].has_value() == res.values[r][c].has_value());
        if (parsed.values[r][c].has_value()) {
          REQUIRE(*parsed.values[r][c] == *res.values[r][c]);
        }
      }
    }
    std::filesystem::remove(path);
  }
  SECTION("unbounded limits render as inf") {
    SweepSpec lim = spec;
    lim.base.dest_adc = AdcModel::infinite_resolution();
    lim.axis = "M";
    lim.values = {32, 64};
    lim.outputs = {OutputKind::kLimit};
    const SweepResult res = run_sweep(lim, 0, 1);
    REQUIRE(std::isinf(*res.values[0][1]));
  }
  SECTION("monte-carlo columns carry standard errors") {
    spec.values = {1.0};
    spec.outputs = {OutputKind::kExact, OutputKind::kMc};
    const SweepResult res = run_sweep(spec, 400, 9);
    const auto& header = res.table.header;
    const auto it = std::find(header.begin(), header.end(), "mc_se_sum");
    REQUIRE(it != header.end());
    const std::size_t se_col = it - header.begin();
    REQUIRE(res.values[0][se_col].has_value());
    REQUIRE(*res.values[0][se_col] > 0.0);
    // mc sum rate lands near the exact value at this sample size
    REQUIRE_THAT(*res.values[0][2],
                 Catch::Matchers::WithinRel(*res.values[0][1], 0.05));
  }
}

TEST_CASE("validation harness") {
  const SystemConfig c = parse_config_text(kFig3Json);
  const ValidationReport rep = run_validation(c, 2000, 2);
  REQUIRE(rep.pass);
  REQUIRE(rep.rows.size() == 6 * 5 + 4);
  REQUIRE(rep.max_abs_z <= 3.0);

  SECTION("a corrupted closed form trips the comparison") {
    // scale the coherent-gain targets by 1.1 and re-score
    double worst = 0.0;
    for (const auto& row : rep.rows) {
      if (row.term == "desired_power") {
        const double z =
            validation_zscore(row.closed_form * 1.1, row.mc_mean, row.mc_se);
        worst = std::max(worst, std::abs(z));
      }
    }
    REQUIRE(worst > 3.0);
  }
  SECTION("ideal converters give exactly zero quantization rows") {
    SystemConfig ideal = c;
    ideal.relay_adc = AdcModel::infinite_resolution();
    const ValidationReport r2 = run_validation(ideal, 1000, 2);
    for (const auto& row : r2.rows) {
      if (row.term == "relay_quant" || row.term == "f_quant_norm") {
        REQUIRE(row.closed_form == 0.0);
        REQUIRE(row.mc_mean == 0.0);
        REQUIRE(row.z == 0.0);
      }
    }
  }
  SECTION("sample floor is enforced") {
    REQUIRE_THROWS_AS(run_validation(c, 999, 1), ConfigError);
  }
}

TEST_CASE("design dispatch echoes linear and dB") {
  DesignQuery q;
  q.kind = DesignKind::kOptimalRelayPower;
  q.config = make_homogeneous_config(64, 5, 0.1, 1.0, 0.1, 0.01,
                                     AdcModel::from_bits(1), AdcModel::from_bits(2));
  const DesignResult res = run_design(q);
  REQUIRE_THAT(to_db(res.value), Catch::Matchers::WithinAbs(7.514, 0.01));
  REQUIRE(res.text().find("7.514") != std::string::npos);

  const auto path = temp_file("fdrelay_design.csv");
  std::filesystem::remove(path);
  append_design_csv(res, path.string());
  append_design_csv(res, path.string());
  const ParsedCsv parsed = read_csv(path.string());
  REQUIRE(parsed.values.size() == 2);
  REQUIRE(*parsed.values[0][1] == res.value);
  std::filesystem::remove(path);
}

TEST_CASE("preset catalog matches the caption parameter table") {
  struct Expected {
    const char* name;
    int users;
    double p_s, p_r, p_p, sli2;       // linear
    double relay_rho, dest_rho;
    const char* axis;
  };
  const Expected table[] = {
      {"fig3", 5, 1.0, 10.0, 10.0, 1.0, 0.8825, 0.8825, "p_S"},
      {"fig4", 5, 1.0, 1.0, 1.0, 0.1, 0.8825, 0.8825, "M"},
      {"fig5", 5, 1.0, 1.0, 1.0, 0.1, 0.6366, 1.0, "M"},
      {"fig6", 5, 0.1, 0.1, 0.1, 1.0, 0.8825, 0.8825, "sigma_LI2"},
      {"fig7", 5, 0.1, 1.0, 0.1, 0.01, 0.6366, 0.8825, "p_R"},
      {"fig8", 5, 1.0, 1.0, 1.0, 0.01, 0.6366, 0.6366, "M"},
      {"fig9", 5, 1.0, 1.0, 1.0, from_db(16.0), 0.8825, 0.8825, "M"},
  };
  for (const Expected& e : table) {
    const Preset* p = find_preset(e.name);
    REQUIRE(p != nullptr);
    const SystemConfig c = parse_config_text(p->base_json);
    INFO(e.name);
    REQUIRE(c.user_pairs == e.users);
    REQUIRE_THAT(c.source_power, Catch::Matchers::WithinRel(e.p_s, 1e-12));
    REQUIRE_THAT(c.relay_power, Catch::Matchers::WithinRel(e.p_r, 1e-12));
    REQUIRE_THAT(c.pilot_power, Catch::Matchers::WithinRel(e.p_p, 1e-12));
    REQUIRE_THAT(c.loop_interference, Catch::Matchers::WithinRel(e.sli2, 1e-12));
    REQUIRE(c.relay_adc.rho == e.relay_rho);
    REQUIRE(c.dest_adc.rho == e.dest_rho);
    REQUIRE(p->axis == std::string(e.axis));
    REQUIRE(c.coherence_symbols == 196);
    REQUIRE(c.pilot_symbols == c.user_pairs);
  }
  REQUIRE(find_preset("fig2") == nullptr);
  // fig8 is the inverse-design preset targeting 5 bits/s/Hz
  REQUIRE(find_preset("fig8")->design_mode);
  REQUIRE(find_preset("fig8")->design_target == 5.0);
}

TEST_CASE("exact rate approaches the limit from below along the fig4 axis") {
  const Preset* p = find_preset("fig4");
  REQUIRE(p != nullptr);
  const SystemConfig base = parse_config_text(p->base_json);
  double prev_rate = 0.0;
  double prev_gap = std::numeric_limits<double>::infinity();
  for (int m : {64, 128, 256, 512, 1024}) {
    SystemConfig c = base;
    c.relay_antennas = m;
    const double exact = exact_rate(c).sum_rate;
    const double limit = arma::accu(limit_rate_infinite_M(c).rate);
    REQUIRE(exact < limit);
    REQUIRE(exact > prev_rate);
    REQUIRE(limit - exact < prev_gap);
    prev_rate = exact;
    prev_gap = limit - exact;
  }
}

TEST_CASE("fig9 preset keeps full duplex ahead at the benchmark array size") {
  const Preset* p = find_preset("fig9");
  SystemConfig c = parse_config_text(p->base_json);
  c.relay_antennas = 185;
  REQUIRE(arma::accu(approx_rate(c).rate) > arma::accu(half_duplex_rate(c)));
}

TEST_CASE("fig8 preset emits the inverse-design table") {
  const Preset* p = find_preset("fig8");
  Preset narrowed = *p;
  narrowed.values = {200};
  const SweepResult res = run_preset(narrowed, {}, 0, 1, "");
  REQUIRE(res.table.header ==
          std::vector<std::string>{"M", "required_p_S", "required_p_S_db"});
  REQUIRE(res.values.size() == 1);
  REQUIRE_THAT(*res.values[0][2], Catch::Matchers::WithinAbs(-6.25, 0.5));
}

#ifdef FDRELAY_CLI_PATH
TEST_CASE("command-line exit-status contract") {
  const std::string cli = FDRELAY_CLI_PATH;
  const auto cfg = temp_file("fdrelay_cli_cfg.json");
  {
    std::ofstream out(cfg);
    out << kFig3Json;
  }
  auto run = [](const std::string& cmd) {
    const int status = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(status);
  };
  // malformed design query -> usage error
  REQUIRE(run(cli + " design bogus-query --config " + cfg.string()) == 2);
  // missing config file -> usage error
  REQUIRE(run(cli + " sweep --config /nonexistent.json --axis M --values 8,16") == 2);
  // good design query (homogeneous closed form needs unit gains) -> success
  REQUIRE(run(cli + " design optimal-relay-power --config " + cfg.string()) == 0);
  // unreachable target -> evaluation error
  REQUIRE(run(cli + " design required-antennas --config " + cfg.string() +
              " --target 500 --max-antennas 128") == 1);
  std::filesystem::remove(cfg);
}
#endif
