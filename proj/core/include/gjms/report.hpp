// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gjms {

enum class Status { Pass, Fail, Error };

const char* statusName(Status s);

// Outcome of a single verification.
struct CheckReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  Status status = Status::Pass;
  // Exact printable residual; "0" on success.
  std::string residual = "0";
  // Optional free-form detail (offending words, failing order, ...).
  std::string detail;
  long elapsedMs = 0;
  std::optional<std::uint64_t> seed;

  bool passed() const { return status == Status::Pass; }
  // Sort key: name followed by the parameter values.
  std::string key() const;
};

CheckReport makeReport(std::string name, std::vector<std::pair<std::string, std::string>> params = {});

// Runs body and fills in elapsed time; exceptions become Status::Error.
CheckReport runTimed(CheckReport report, const std::function<void(CheckReport&)>& body);

// Marks the report failed with the given residual unless residual is "0".
void settle(CheckReport& report, const std::string& residual, const std::string& detail = {});

}  // namespace gjms
