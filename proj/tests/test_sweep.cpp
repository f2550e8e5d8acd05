#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "tough/report.hpp"
#include "tough/sweep.hpp"

using namespace tough;

namespace {

std::string records(const SweepReport& r) {
  std::ostringstream os;
  write_sweep_records(os, r);
  return os.str();
}

SweepReport sweep_text(const std::string& text, bool strict = false) {
  std::istringstream in(text);
  SweepConfig config;
  config.input = &in;
  config.strict = strict;
  config.corpus_id = "inline";
  return sweep(config);
}

}  // namespace

TEST_CASE("connected labelled graphs on four vertices pass every check") {
  SweepConfig config;
  config.generated = GeneratedCorpus{4, true};
  const auto r = sweep(config);
  CHECK(r.graphs_checked == 38);
  CHECK(r.violations.empty());
  CHECK(r.parse_errors.empty());
  CHECK(r.clean());
}

TEST_CASE("complete graph corpus skips toughness slack checks") {
  const auto r = sweep_text("C~\n");
  CHECK(r.graphs_checked == 1);
  CHECK(r.violations.empty());
  CHECK(std::find(r.interesting.begin(), r.interesting.end(), Interesting{"C~", "complete"}) !=
        r.interesting.end());
}

TEST_CASE("malformed corpus lines are reported and the sweep continues") {
  const auto r = sweep_text("Cl\n!!\nC~\n");
  REQUIRE(r.parse_errors.size() == 1);
  CHECK(r.parse_errors[0].line == 2);
  CHECK(r.parse_errors[0].text == "!!");
  CHECK(r.graphs_checked == 2);
  CHECK_FALSE(r.aborted);
  CHECK(r.clean());

  const auto strict = sweep_text("Cl\n!!\nC~\n", true);
  CHECK(strict.aborted);
  CHECK(strict.graphs_checked == 0);
}

TEST_CASE("reports do not depend on the number of workers") {
  SweepConfig config;
  config.generated = GeneratedCorpus{5, false};
  config.jobs = 1;
  const auto one = sweep(config);
  config.jobs = 4;
  const auto four = sweep(config);
  CHECK(one.graphs_checked == 1024);
  CHECK(one.graphs_checked == four.graphs_checked);
  CHECK(records(one) == records(four));
  CHECK_FALSE(one.interesting.empty());
}

TEST_CASE("a corrupted bound is caught as a violation") {
  // Slack -1 demands bound <= τ - 1, which C4 (τ = 1, 1/Δ = 1/2) fails.
  SweepConfig config;
  config.checks = {Check::kThm11};
  config.tol = {-1.0, 1e-7};
  std::istringstream in("Cl\n");
  config.input = &in;
  const auto r = sweep(config);
  CHECK_FALSE(r.clean());
  CHECK(records(r).find("\"type\":\"violation\"") != std::string::npos);
}

TEST_CASE("check names round trip") {
  for (Check c : all_checks()) CHECK(parse_check(to_string(c)) == c);
  CHECK_FALSE(parse_check("nope").has_value());
}

TEST_CASE("bound report JSON has the documented field order") {
  const auto r = make_bound_report(Graph::petersen());
  const Json j = to_json(r);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  const std::vector<std::string> expected = {
      "graph_id",          "n",          "m",
      "delta",             "Delta",      "tau",
      "thm11_inv_Delta",   "thm11_degree_term", "thm11_spectral_term",
      "eq11_value",        "eq12_value", "regular_brouwer",
      "regular_brouwer_strict", "regular_alon", "corollary_cap",
      "equality_eq11",     "equality_eq12", "xi_anomaly"};
  CHECK(keys == expected);
  CHECK(j["tau"] == "4/3");

  std::string header = bound_report_csv_header();
  std::string joined;
  for (const auto& k : expected) joined += (joined.empty() ? "" : ",") + k;
  CHECK(header == joined);

  const std::string row = to_csv_row(r);
  CHECK(std::count(row.begin(), row.end(), ',') == std::count(header.begin(), header.end(), ','));
  CHECK(row.rfind("IheA@GUAo,10,15,3,3,4/3,", 0) == 0);
}

TEST_CASE("non-finite reals serialize as strings") {
  CHECK(json_real(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(json_real(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(json_real(std::nan("")).is_null());
  CHECK(format_real(0.5) == "0.5");
  const auto k4 = to_json(make_bound_report(Graph::complete(4)));
  CHECK(k4["tau"] == "inf");
  CHECK(k4["eq11_value"] == "inf");
  CHECK(k4["corollary_cap"].is_null());
}
