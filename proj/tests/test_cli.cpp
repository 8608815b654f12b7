// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <regex>
#include <sstream>

#include "gjmskit/checks.hpp"
#include "gjmskit/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "gjmskit");
  std::ostringstream out, err;
  int code = gjmskit::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> lines(const std::string& s) {
  std::vector<nlohmann::json> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(nlohmann::json::parse(l));
  return v;
}

const std::string kSphere = std::string(GJMS_TEST_DATA) + "/sphere4.json";

}  // namespace

TEST_CASE("coefficient table") {
  Result r = call({"coeffs", "--max-order", "3", "--format", "table"});
  CHECK(r.code == 0);
  CHECK(std::regex_search(r.out, std::regex(R"(\(1,2\)\s+-2\s+2)")));
  Result j = call({"coeffs", "--max-order", "4", "--format", "json"});
  auto rows = lines(j.out);
  CHECK(rows.size() == 15);
  CHECK(rows[0]["composition"] == "(1)");
  Result c = call({"coeffs", "--max-order", "2", "--format", "csv"});
  CHECK(c.out == "N,composition,m,n\n1,\"(1)\",1,1\n2,\"(1,1)\",-1,1\n2,\"(2)\",1,1\n");
}

TEST_CASE("verify inversion emits one passing record per order") {
  Result r = call({"verify", "inversion", "--max-order", "5"});
  CHECK(r.code == 0);
  auto rows = lines(r.out);
  REQUIRE(rows.size() == 5);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i]["check"] == "inversion");
    CHECK(rows[i]["status"] == "pass");
    CHECK(rows[i]["residual"] == "0");
    CHECK(rows[i]["params"]["N"] == std::to_string(i + 1));
  }
}

TEST_CASE("verify subcommands") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"verify", "lemma1", "--s-max", "5", "--trials", "50", "--seed", "3"},
           {"verify", "residue", "--max-order", "3"},
           {"verify", "identities", "--max-order", "5"},
           {"verify", "einstein", "--max-order", "3", "--n", "7", "--lambda", "formal"},
           {"verify", "lcf", "--max-order", "3"},
           {"verify", "lcf", "--schouten", kSphere, "--max-order", "4", "--n", "4"}}) {
    CAPTURE(args[1]);
    Result r = call(args);
    CHECK(r.code == 0);
    for (const auto& row : lines(r.out)) CHECK(row["status"] == "pass");
  }
}

TEST_CASE("lemma1 report carries its seed") {
  auto rows = lines(call({"verify", "lemma1", "--trials", "20", "--seed", "99"}).out);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0]["seed"] == 99);
}

TEST_CASE("Q-curvature of the round four-sphere") {
  CHECK(call({"q", "--model", "lcf", "--schouten", kSphere, "--order", "4"}).out == "6\n");
  CHECK(call({"q", "--model", "lcf", "--schouten", kSphere, "--order", "2"}).out == "2\n");
  CHECK(call({"q", "--model", "einstein", "--order", "4", "--n", "4", "--lambda", "1"}).out == "6\n");
  CHECK(call({"q", "--model", "einstein", "--order", "2"}).out == "1/2*lambda*n\n");
  CHECK(call({"q", "--model", "lcf", "--schouten", kSphere, "--order", "4", "--route", "recursive"}).out == "6\n");
}

TEST_CASE("series dump") {
  Result r = call({"series", "--model", "lcf", "--schouten", kSphere, "--what", "v", "--truncation", "2"});
  CHECK(r.out == "r^0\t1\nr^2\t-1\nr^4\t3/8\n");
  Result h = call({"series", "--model", "einstein", "--what", "h0", "--truncation", "1", "--n", "4", "--lambda", "1",
                   "--format", "json"});
  auto rows = lines(h.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0]["coefficient"] == "-2");
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"verify"}).code == 2);
  CHECK(call({"verify", "inversion", "--max-order", "zero"}).code == 2);
  CHECK(call({"coeffs", "--format", "xml"}).code == 2);
  CHECK(call({"q", "--model", "lcf", "--order", "4"}).code == 2);
  CHECK(call({"q", "--model", "einstein", "--order", "3"}).code == 2);
  CHECK(call({"q", "--model", "lcf", "--schouten", "/nonexistent.json", "--order", "4"}).code == 2);
  CHECK(call({"verify", "einstein", "--n", "seven"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("Schouten file parsing") {
  CHECK(gjmskit::parseSchouten(R"([["1/2", "0"], ["0", 3]])").dim() == 2);
  CHECK_THROWS(gjmskit::parseSchouten(R"([["1", "2"], ["3", "1"]])"));
  CHECK_THROWS(gjmskit::parseSchouten(R"([["1", "2"]])"));
  CHECK_THROWS(gjmskit::parseSchouten(R"([[1.5]])"));
  CHECK_THROWS(gjmskit::parseSchouten("{"));
}

TEST_CASE("reports are deterministic across thread counts") {
  gjmskit::Plan plan = gjmskit::planResidue(3, 5);
  plan.append(gjmskit::planInversion(6));
  auto one = gjmskit::execute(plan, 1u), many = gjmskit::execute(plan, 4u);
  REQUIRE(one.size() == many.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].key() == many[i].key());
    CHECK(one[i].residual == many[i].residual);
  }
  for (std::size_t i = 1; i < one.size(); ++i) CHECK(one[i - 1].key() < one[i].key());
}
