// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#include "gjmskit/checks.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "gjms/identities.hpp"
#include "gjms/residue.hpp"

namespace gjmskit {

using namespace gjms;

void Plan::append(Plan other) {
  for (auto& t : other.tasks) tasks.push_back(std::move(t));
}

Plan planInversion(int maxOrder) {
  Plan p;
  for (int N = 1; N <= maxOrder; ++N) p.add([N] { return checkInversion(N); });
  return p;
}

Plan planIdentities(int maxOrder) {
  Plan p;
  for (int N = 1; N <= maxOrder; ++N) {
    p.add([N] { return checkSelfAdjoint(N); });
    p.add([N] { return checkSplitRelations(N); });
  }
  for (int N = 1; N <= std::min(maxOrder, 8); ++N) p.add([N] { return checkPiPoly(N); });
  return p;
}

Plan planResidue(int maxOrder, std::uint64_t seed) {
  Plan p;
  for (int N = 1; N <= maxOrder; ++N) {
    p.add([N] { return checkDirectEqualsClosed(N); });
    p.add([N] { return checkConstantTerm(N); });
    p.add([N] { return checkFactorizations(N); });
    p.add([N] { return checkSigmaSymmetry(N); });
    p.add([N] { return checkTopCoefficients(N); });
    p.add([N] { return checkPiScalars(N); });
    p.add([N, seed] { return checkSumLemmas(N, 20, seed + static_cast<std::uint64_t>(N)); });
  }
  return p;
}

Plan planLemma1(int sMax, int trials, std::uint64_t seed) {
  Plan p;
  p.add([=] { return checkLemma1(sMax, trials, seed); });
  return p;
}

Plan planEinstein(int maxOrder, const EinsteinModel& model) {
  Plan p;
  for (int N = 1; N <= maxOrder; ++N) {
    p.add([N, model] { return checkEinsteinM(model, N); });
    p.add([N, model] { return checkEinsteinInversion(model, N); });
    p.add([N, model] { return checkEinsteinQ(model, N); });
    p.add([N] { return checkEinsteinFlat(N); });
    p.add([N] { return checkSumRound(N); });
    p.add([N] { return checkEinsteinLCFAgreement(N); });
  }
  p.add([maxOrder] { return checkSphereEigenvalues(3, 8, 5, std::min(maxOrder, 4)); });
  if (maxOrder >= 2) p.add([] { return checkSphereQ(); });
  return p;
}

Plan planLCF(int maxOrder, const SchoutenModel& model) {
  Plan p;
  const int gfOrder = std::max(maxOrder, 8);
  if (model.available() >= gfOrder + 1) p.add([model, gfOrder] { return checkGFIdentity(model, gfOrder); });
  for (int N = 1; N <= maxOrder; ++N) {
    p.add([N, model] { return checkMuLCF(model, N); });
    p.add([N, model] { return checkBasic2(model, N); });
  }
  for (int N = 1; N <= std::min(maxOrder, 6); ++N) p.add([N, model] { return checkBasicSum(model, N); });
  const int qOrder = std::min(maxOrder, 4);
  p.add([qOrder, model] { return checkQLCF(model, qOrder); });
  if (maxOrder >= 4) {
    p.add([model] { return checkQLiteral(model); });
    p.add([model] { return checkWVRelations(model); });
  }
  if (model.available() >= 2 * (maxOrder + 1)) p.add([maxOrder, model] { return checkBarSeries(model, maxOrder); });
  if (model.matrix) p.add([model, maxOrder] { return checkDoubleMetric(model, std::min(maxOrder, 6)); });
  return p;
}

Plan planAll(std::optional<int> maxOrder, std::uint64_t seed) {
  auto cap = [&](int d) { return maxOrder ? std::min(*maxOrder, d) : d; };
  Plan p = planInversion(cap(10));
  p.append(planIdentities(cap(10)));
  p.append(planResidue(cap(6), seed));
  p.append(planLemma1(8, 200, seed));
  p.append(planEinstein(cap(8), EinsteinModel{}));
  const int lcf = cap(8);
  p.append(planLCF(lcf, SchoutenModel::fromMatrix(randomDiagonal(10, seed), std::max(2 * (lcf + 1), 9))));
  return p;
}

unsigned threadBudget() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("GJMSKIT_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return hw;
}

std::vector<CheckReport> execute(const Plan& plan, std::optional<unsigned> threads) {
  std::vector<CheckReport> out(plan.tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < plan.tasks.size(); i = next++) {
      try {
        out[i] = plan.tasks[i]();
      } catch (const std::exception& e) {
        out[i] = makeReport("task");
        out[i].status = Status::Error;
        out[i].detail = e.what();
      }
    }
  };
  unsigned n = std::min<unsigned>(threads.value_or(threadBudget()), static_cast<unsigned>(plan.tasks.size()));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::stable_sort(out.begin(), out.end(), [](const CheckReport& a, const CheckReport& b) { return a.key() < b.key(); });
  return out;
}

}  // namespace gjmskit
