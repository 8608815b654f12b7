// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gjms/models.hpp"
#include "gjms/report.hpp"

namespace gjmskit {

using Task = std::function<gjms::CheckReport()>;

struct Plan {
  std::vector<Task> tasks;
  void add(Task t) { tasks.push_back(std::move(t)); }
  void append(Plan other);
};

Plan planInversion(int maxOrder);
Plan planIdentities(int maxOrder);
Plan planResidue(int maxOrder, std::uint64_t seed);
Plan planLemma1(int sMax, int trials, std::uint64_t seed);
Plan planEinstein(int maxOrder, const gjms::EinsteinModel& model);
Plan planLCF(int maxOrder, const gjms::SchoutenModel& model);
// Every acceptance-level check; orders are capped by maxOrder when given.
Plan planAll(std::optional<int> maxOrder, std::uint64_t seed);

// Runs on up to `threads` workers (GJMSKIT_THREADS, else hardware concurrency) and sorts by key.
std::vector<gjms::CheckReport> execute(const Plan& plan, std::optional<unsigned> threads = std::nullopt);
unsigned threadBudget();

}  // namespace gjmskit
