// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#include "gjmskit/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "gjms/composition.hpp"
#include "gjms/models.hpp"
#include "gjmskit/checks.hpp"

namespace gjmskit {

using gjms::Rational;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<Rational> parseOptional(const std::string& text, const char* flag) {
  if (text.empty() || text == "formal") return std::nullopt;
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError(std::string("--") + flag + " expects 'formal' or a rational, got '" + text + "'");
  }
}

int emit(const std::vector<gjms::CheckReport>& reports, std::ostream& out) {
  bool ok = true;
  for (const auto& r : reports) {
    out << reportJson(r) << '\n';
    ok = ok && r.passed();
  }
  return ok ? kOk : kCheckFailed;
}

// ------------------------------------------------------------------ coeffs

int runCoeffs(int maxOrder, const std::string& format, std::ostream& out) {
  struct Row {
    int N;
    std::string I, m, n;
  };
  std::vector<Row> rows;
  for (int N = 1; N <= maxOrder; ++N)
    for (const auto& I : gjms::enumerateCompositions(N))
      rows.push_back({N, I.str(), gjms::mcoeff(I).str(), gjms::ncoeff(I).str()});
  if (format == "json") {
    for (const auto& r : rows) out << json{{"N", r.N}, {"composition", r.I}, {"m", r.m}, {"n", r.n}}.dump() << '\n';
  } else if (format == "csv") {
    out << "N,composition,m,n\n";
    for (const auto& r : rows) out << r.N << ",\"" << r.I << "\"," << r.m << ',' << r.n << '\n';
  } else {
    std::size_t wI = 11, wm = 3, wn = 3;
    for (const auto& r : rows) {
      wI = std::max(wI, r.I.size());
      wm = std::max(wm, r.m.size());
      wn = std::max(wn, r.n.size());
    }
    auto line = [&](const std::string& a, const std::string& b, const std::string& c, const std::string& d) {
      out << std::left << std::setw(4) << a << "  " << std::setw(static_cast<int>(wI)) << b << "  " << std::right
          << std::setw(static_cast<int>(wm)) << c << "  " << std::setw(static_cast<int>(wn)) << d << '\n';
    };
    line("N", "composition", "m_I", "n_I");
    for (const auto& r : rows) line(std::to_string(r.N), r.I, r.m, r.n);
  }
  return kOk;
}

// ------------------------------------------------------------------ q

struct ModelFlags {
  std::string model = "einstein";
  std::string schouten;
  std::string n = "formal";
  std::string lambda = "formal";
};

gjms::SchoutenModel lcfModel(const ModelFlags& f, int powerSums, bool defaultToRank) {
  if (f.schouten.empty()) throw UsageError("--schouten FILE is required for the lcf model");
  gjms::Matrix P = loadSchouten(f.schouten);
  auto m = gjms::SchoutenModel::fromMatrix(P, powerSums);
  if (!defaultToRank || f.n != "formal")
    m.n = parseOptional(f.n, "n");
  else
    m.n = Rational(P.dim());
  return m;
}

int runQ(const ModelFlags& f, bool nGiven, int order, const std::string& route, std::ostream& out, std::ostream& err) {
  if (order < 2 || order % 2) throw UsageError("--order must be a positive even integer");
  const int N = order / 2;
  gjms::QTable q;
  gjms::EvalPoint at;
  if (f.model == "einstein") {
    gjms::EinsteinModel m{parseOptional(f.n, "n"), parseOptional(f.lambda, "lambda")};
    q = gjms::qEinstein(m, N);
    at = m.point();
  } else if (f.model == "lcf") {
    auto m = lcfModel(f, N, !nGiven);
    q = gjms::qLCF(m, N);
    at = m.point();
  } else {
    throw UsageError("unknown model '" + f.model + "'");
  }
  auto value = [&](const std::vector<gjms::Poly>& v) { return v[N].partialEvaluate(at).str(); };
  const std::string def = value(q.viaDefinition), ex = value(q.viaExplicit), rec = value(q.viaRecursive);
  if (route == "definition") {
    out << def << '\n';
  } else if (route == "explicit") {
    out << ex << '\n';
  } else if (route == "recursive") {
    out << rec << '\n';
  } else {
    if (def != ex || def != rec) {
      err << "Q routes disagree: definition " << def << ", explicit " << ex << ", recursive " << rec << '\n';
      return kCheckFailed;
    }
    out << def << '\n';
  }
  return kOk;
}

// ------------------------------------------------------------------ series

int runSeries(const ModelFlags& f, bool nGiven, const std::string& what, int K, const std::string& format,
              std::ostream& out) {
  if (K < 0) throw UsageError("--truncation must be non-negative");
  gjms::SchoutenModel m;
  gjms::EvalPoint at;
  if (f.model == "einstein") {
    m = gjms::SchoutenModel::fromEinstein(K + 1);
    at = gjms::EinsteinModel{parseOptional(f.n, "n"), parseOptional(f.lambda, "lambda")}.point();
  } else if (f.model == "lcf") {
    m = lcfModel(f, K + 1, !nGiven);
    at = m.point();
  } else {
    throw UsageError("unknown model '" + f.model + "'");
  }
  gjms::TruncatedSeries<gjms::Poly> s;
  if (what == "v")
    s = gjms::vSeries(m, K);
  else if (what == "w")
    s = gjms::wSeries(m, K);
  else
    s = gjms::h0Series(m, K);
  for (int k = 0; k <= K; ++k) {
    std::string c = s[k].partialEvaluate(at).str();
    if (format == "json")
      out << json{{"power", 2 * k}, {"coefficient", c}}.dump() << '\n';
    else
      out << "r^" << 2 * k << '\t' << c << '\n';
  }
  return kOk;
}

}  // namespace

std::string reportJson(const gjms::CheckReport& r) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  json j{{"check", r.name}, {"params", params},  {"status", gjms::statusName(r.status)},
         {"residual", r.residual}, {"detail", r.detail}, {"elapsed_ms", r.elapsedMs}};
  if (r.seed) j["seed"] = *r.seed;
  return j.dump();
}

gjms::Matrix parseSchouten(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("Schouten file is not valid JSON: ") + e.what());
  }
  if (!j.is_array()) throw std::invalid_argument("Schouten file must hold an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw std::invalid_argument("Schouten rows must be arrays");
    std::vector<Rational> r;
    for (const auto& x : row) {
      if (x.is_string())
        r.push_back(Rational::parse(x.get<std::string>()));
      else if (x.is_number_integer())
        r.emplace_back(x.get<long>());
      else
        throw std::invalid_argument("Schouten entries must be \"p/q\" strings");
    }
    rows.push_back(std::move(r));
  }
  gjms::Matrix P = gjms::Matrix::fromRows(rows);
  if (!P.isSymmetric()) throw std::invalid_argument("Schouten matrix must be symmetric");
  return P;
}

gjms::Matrix loadSchouten(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open Schouten file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parseSchouten(ss.str());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of GJMS building-block and Q-curvature identities", "gjmskit"};
  app.require_subcommand(1);

  int coeffMax = 4;
  std::string coeffFormat = "table";
  auto* coeffs = app.add_subcommand("coeffs", "Tabulate m_I and n_I for all compositions");
  coeffs->add_option("--max-order", coeffMax, "Largest N")->check(CLI::Range(1, 20));
  coeffs->add_option("--format", coeffFormat)->check(CLI::IsMember({"json", "csv", "table"}));

  auto* verify = app.add_subcommand("verify", "Run verification checks and emit JSON reports");
  verify->require_subcommand(1);
  int maxOrder = 0;
  int sMax = 8, trials = 200;
  std::uint64_t seed = 1;
  ModelFlags mf;
  auto* vInv = verify->add_subcommand("inversion", "Inversion formula by full expansion");
  auto* vIds = verify->add_subcommand("identities", "Self-adjointness, split relations, pi-polynomials");
  auto* vRes = verify->add_subcommand("residue", "Residue family constructions and factorizations");
  auto* vLem = verify->add_subcommand("lemma1", "Alternating subset sum against its closed form");
  auto* vEin = verify->add_subcommand("einstein", "Einstein model with formal n and lambda");
  auto* vLcf = verify->add_subcommand("lcf", "Constant Schouten model");
  auto* vAll = verify->add_subcommand("all", "Every acceptance check");
  for (auto* s : {vInv, vIds, vRes, vEin, vLcf, vAll}) s->add_option("--max-order", maxOrder)->check(CLI::Range(1, 12));
  for (auto* s : {vRes, vLem, vLcf, vAll}) s->add_option("--seed", seed);
  vLem->add_option("--s-max", sMax)->check(CLI::Range(1, 16));
  vLem->add_option("--trials", trials)->check(CLI::Range(1, 100000));
  vEin->add_option("--n", mf.n, "formal or a rational");
  vEin->add_option("--lambda", mf.lambda, "formal or a rational");
  vLcf->add_option("--schouten", mf.schouten, "JSON matrix file; a random diagonal matrix is used otherwise");
  vLcf->add_option("--n", mf.n, "formal or a rational");

  int order = 0;
  std::string route = "all";
  auto* q = app.add_subcommand("q", "Q-curvature of a model");
  q->add_option("--model", mf.model)->check(CLI::IsMember({"einstein", "lcf"}));
  q->add_option("--order", order, "Order 2N")->required();
  q->add_option("--schouten", mf.schouten);
  auto* qn = q->add_option("--n", mf.n, "formal or a rational; lcf defaults to the matrix rank");
  q->add_option("--lambda", mf.lambda);
  q->add_option("--route", route)->check(CLI::IsMember({"all", "definition", "explicit", "recursive"}));

  std::string what = "w", seriesFormat = "table";
  int truncation = 8;
  auto* series = app.add_subcommand("series", "Coefficient table of v, w or H_0");
  series->add_option("--model", mf.model)->check(CLI::IsMember({"einstein", "lcf"}));
  series->add_option("--what", what)->check(CLI::IsMember({"v", "w", "h0"}));
  series->add_option("--truncation", truncation)->check(CLI::Range(0, 40));
  series->add_option("--schouten", mf.schouten);
  auto* sn = series->add_option("--n", mf.n);
  series->add_option("--lambda", mf.lambda);
  series->add_option("--format", seriesFormat)->check(CLI::IsMember({"json", "table"}));

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  auto order_ = [&](int d) { return maxOrder > 0 ? maxOrder : d; };
  try {
    if (*coeffs) return runCoeffs(coeffMax, coeffFormat, out);
    if (*q) return runQ(mf, qn->count() > 0, order, route, out, err);
    if (*series) return runSeries(mf, sn->count() > 0, what, truncation, seriesFormat, out);

    Plan plan;
    if (*vInv) plan = planInversion(order_(10));
    if (*vIds) plan = planIdentities(order_(10));
    if (*vRes) plan = planResidue(order_(6), seed);
    if (*vLem) plan = planLemma1(sMax, trials, seed);
    if (*vEin) plan = planEinstein(order_(8), gjms::EinsteinModel{parseOptional(mf.n, "n"), parseOptional(mf.lambda, "lambda")});
    if (*vLcf) {
      const int N = order_(8);
      const int K = std::max(2 * (N + 1), 9);
      gjms::SchoutenModel m = mf.schouten.empty()
                                  ? gjms::SchoutenModel::fromMatrix(gjms::randomDiagonal(10, seed), K)
                                  : gjms::SchoutenModel::fromMatrix(loadSchouten(mf.schouten), K);
      m.n = parseOptional(mf.n, "n");
      plan = planLCF(N, m);
    }
    if (*vAll) plan = planAll(maxOrder > 0 ? std::optional<int>(maxOrder) : std::nullopt, seed);
    return emit(execute(plan), out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace gjmskit
