// SPDX-License-Identifier: Apache-2.0
//
// fdrelay — rate analysis for full-duplex massive MIMO AF relaying
// with low-resolution ADCs
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include <benchmark/benchmark.h>

#include "fdrelay/channel.hpp"
#include "fdrelay/mc_oracle.hpp"
#include "fdrelay/rate_exact.hpp"
#include "fdrelay/rng.hpp"
#include "fdrelay/units.hpp"

namespace {

using namespace fdrelay;

SystemConfig bench_config(int m) {
  return make_homogeneous_config(m, 5, from_db(10), from_db(10), from_db(10),
                                 from_db(0), AdcModel::from_bits(2),
                                 AdcModel::from_bits(2));
}

void BM_NormalDraws(benchmark::State& state) {
  RandomStream rng(7, 0);
  double acc = 0.0;
  for (auto _ : state) {
    for (int i = 0; i < 1024; ++i) acc += rng.normal();
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * 1024);
}
BENCHMARK(BM_NormalDraws);

void BM_DrawChannels(benchmark::State& state) {
  const SystemConfig cfg = bench_config(static_cast<int>(state.range(0)));
  std::uint64_t r = 0;
  for (auto _ : state) {
    RandomStream rng(7, r++);
    ChannelSet ch = draw_channels(cfg, rng);
    benchmark::DoNotOptimize(ch.g_rr.memptr());
  }
}
BENCHMARK(BM_DrawChannels)->Arg(128)->Arg(512);

void BM_PilotEstimation(benchmark::State& state) {
  const SystemConfig cfg = bench_config(static_cast<int>(state.range(0)));
  RandomStream rng(7, 0);
  const ChannelSet ch = draw_channels(cfg, rng);
  std::uint64_t r = 1;
  for (auto _ : state) {
    RandomStream stream(7, r++);
    ChannelEstimate est = simulate_pilot_estimation(ch, cfg, stream);
    benchmark::DoNotOptimize(est.est_sr.memptr());
  }
}
BENCHMARK(BM_PilotEstimation)->Arg(512);

void BM_BilinearForms(benchmark::State& state) {
  const SystemConfig cfg = bench_config(static_cast<int>(state.range(0)));
  RandomStream rng(7, 0);
  const ChannelSet ch = draw_channels(cfg, rng);
  const ChannelEstimate est = simulate_pilot_estimation(ch, cfg, rng);
  for (auto _ : state) {
    BilinearForms bf(est, ch);
    benchmark::DoNotOptimize(bf.f_norm2());
  }
}
BENCHMARK(BM_BilinearForms)->Arg(128)->Arg(512);

void BM_OracleRealization(benchmark::State& state) {
  const SystemConfig cfg = bench_config(static_cast<int>(state.range(0)));
  std::int64_t first = 0;
  for (auto _ : state) {
    McPartialSums s = simulate_terms_partial(cfg, first++, 1, 7);
    benchmark::DoNotOptimize(s.gden);
  }
}
BENCHMARK(BM_OracleRealization)->Arg(128)->Arg(256)->Arg(512);

void BM_ExactBreakdown(benchmark::State& state) {
  const SystemConfig cfg = bench_config(512);
  for (auto _ : state) {
    RateBreakdown b = exact_breakdown(cfg);
    benchmark::DoNotOptimize(b.sum_rate);
  }
}
BENCHMARK(BM_ExactBreakdown);

}  // namespace

BENCHMARK_MAIN();
