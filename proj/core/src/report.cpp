// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#include "gjms/report.hpp"

#include <chrono>
#include <exception>

namespace gjms {

const char* statusName(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return "error";
}

std::string CheckReport::key() const {
  std::string k = name;
  for (const auto& [p, v] : params) {
    k += '\x1f';
    // Zero-pad numeric values so that N=10 sorts after N=9.
    bool numeric = !v.empty() && v.find_first_not_of("0123456789") == std::string::npos;
    k += numeric && v.size() < 8 ? std::string(8 - v.size(), '0') + v : v;
  }
  return k;
}

CheckReport makeReport(std::string name, std::vector<std::pair<std::string, std::string>> params) {
  CheckReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  return r;
}

CheckReport runTimed(CheckReport report, const std::function<void(CheckReport&)>& body) {
  auto start = std::chrono::steady_clock::now();
  try {
    body(report);
  } catch (const std::exception& e) {
    report.status = Status::Error;
    report.detail = e.what();
  }
  auto stop = std::chrono::steady_clock::now();
  report.elapsedMs = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  return report;
}

void settle(CheckReport& report, const std::string& residual, const std::string& detail) {
  report.residual = residual;
  if (residual != "0") {
    report.status = Status::Fail;
    if (!detail.empty()) report.detail = detail;
  }
}

}  // namespace gjms
