// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "gjms/models.hpp"

namespace {

void BM_EinsteinBlock(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  gjms::EinsteinModel e;
  for (auto _ : state) benchmark::DoNotOptimize(gjms::mEinstein(e, N));
}
BENCHMARK(BM_EinsteinBlock)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_EinsteinQ(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  gjms::EinsteinModel e;
  for (auto _ : state) benchmark::DoNotOptimize(gjms::qEinstein(e, N));
}
BENCHMARK(BM_EinsteinQ)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_WSeries(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  auto m = gjms::SchoutenModel::fromMatrix(gjms::randomDiagonal(10, 1), K);
  for (auto _ : state) benchmark::DoNotOptimize(gjms::wSeries(m, K));
}
BENCHMARK(BM_WSeries)->RangeMultiplier(2)->Range(4, 32);

void BM_BarSeries(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  auto m = gjms::SchoutenModel::fromMatrix(gjms::randomDiagonal(10, 1), 2 * (N + 1));
  for (auto _ : state) benchmark::DoNotOptimize(gjms::checkBarSeries(m, N));
}
BENCHMARK(BM_BarSeries)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_DoubleMetric(benchmark::State& state) {
  auto m = gjms::SchoutenModel::fromMatrix(gjms::randomDiagonal(6, 2), 6);
  for (auto _ : state) benchmark::DoNotOptimize(gjms::checkDoubleMetric(m, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_DoubleMetric)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

}  // namespace
