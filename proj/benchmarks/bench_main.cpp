// Copyright 2026 The ldseq Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "ldseq/brs.hpp"
#include "ldseq/digital.hpp"
#include "ldseq/radinv.hpp"
#include "ldseq/verify.hpp"

#include <benchmark/benchmark.h>

namespace {

ldseq::DigitalConfig niederreiter2() {
  const ldseq::FieldSpec f2 = ldseq::FieldSpec::prime(2);
  return ldseq::niederreiter_matrices({ldseq::Poly::parse(f2, "x+1"), ldseq::Poly::parse(f2, "x^2+x+1")});
}

void BM_DigitalPoint(benchmark::State& state) {
  const auto cfg = niederreiter2();
  std::uint64_t n = 0;
  for (auto _ : state) benchmark::DoNotOptimize(ldseq::digital_point(n++ & 0xFFFFF, cfg));
}
BENCHMARK(BM_DigitalPoint);

void BM_TezukaPoint(benchmark::State& state) {
  const ldseq::FieldSpec f2 = ldseq::FieldSpec::prime(2);
  const std::vector<ldseq::Poly> moduli{ldseq::Poly::parse(f2, "x+1"), ldseq::Poly::parse(f2, "x^2+x+1")};
  std::uint64_t n = 0;
  for (auto _ : state) benchmark::DoNotOptimize(ldseq::tezuka_point(n++ & 0xFFFFF, moduli));
}
BENCHMARK(BM_TezukaPoint);

void BM_IsNet(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto pts = ldseq::DigitalSequence(niederreiter2()).points(0, ldseq::upow(2, m));
  for (auto _ : state) benchmark::DoNotOptimize(ldseq::is_net(pts, 2, 1, m));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pts.size()));
}
BENCHMARK(BM_IsNet)->DenseRange(6, 12, 2);

void BM_DeltaProfile(benchmark::State& state) {
  const ldseq::FieldSpec f2 = ldseq::FieldSpec::prime(2);
  const ldseq::DigitalSequence seq(ldseq::niederreiter_matrices({ldseq::Poly::parse(f2, "x+1")}));
  const auto gamma = ldseq::GammaSpec::parse(2, "1/3");
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ldseq::delta_profile(seq, gamma, m));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ldseq::upow(2, m)));
}
BENCHMARK(BM_DeltaProfile)->Arg(10)->Arg(14);

void BM_Admissibility(benchmark::State& state) {
  const auto pts = ldseq::DigitalSequence(niederreiter2()).points(0, 256);
  for (auto _ : state) benchmark::DoNotOptimize(ldseq::is_d_admissible(pts, 2, 3));
}
BENCHMARK(BM_Admissibility);

}  // namespace

BENCHMARK_MAIN();
