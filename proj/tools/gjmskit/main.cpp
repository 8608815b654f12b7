// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "gjmskit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return gjmskit::run(args, std::cout, std::cerr);
}
