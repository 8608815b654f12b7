// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "gjms/identities.hpp"
#include "gjms/residue.hpp"

namespace {

void BM_ExpandInversion(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gjms::expandInversion(N));
  state.SetComplexityN(N);
}
BENCHMARK(BM_ExpandInversion)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_BuildM(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gjms::buildM(N));
}
BENCHMARK(BM_BuildM)->DenseRange(4, 12, 4);

void BM_ResidueClosed(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gjms::buildClosed(N));
}
BENCHMARK(BM_ResidueClosed)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_ResidueDirect(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gjms::buildDirect(N));
}
BENCHMARK(BM_ResidueDirect)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_Lemma1(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gjms::checkLemma1(8, 200, 1));
}
BENCHMARK(BM_Lemma1)->Unit(benchmark::kMillisecond);

}  // namespace
