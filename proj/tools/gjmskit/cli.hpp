// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gjms/matrix.hpp"
#include "gjms/report.hpp"

namespace gjmskit {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

// Entry point shared by main() and the tests. argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string reportJson(const gjms::CheckReport& r);
// Schouten matrix from a JSON array of arrays of "p/q" strings (integers are accepted too).
gjms::Matrix loadSchouten(const std::string& path);
gjms::Matrix parseSchouten(const std::string& text);

}  // namespace gjmskit
