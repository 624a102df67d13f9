#include <algorithm>
#include <set>

#include "doctest.h"
#include "sympcliff/verify.hpp"

using namespace sympcliff;

TEST_CASE("registry is sorted, unique and covers every required invariant") {
  const auto& checks = default_checks();
  std::set<std::string> names, modules;
  for (const auto& c : checks) {
    CHECK(names.insert(c.name).second);
    modules.insert(c.module);
    CHECK(c.name.rfind(c.module + ".", 0) == 0);
  }
  CHECK(std::is_sorted(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.name < b.name; }));
  CHECK(modules.size() == 10);
  CHECK(missing_coverage(checks).empty());
  for (const auto& inv : required_invariants()) CHECK(names.count(inv.check) == 1);
  std::vector<Check> partial(checks.begin() + 1, checks.end());
  CHECK_FALSE(missing_coverage(partial).empty());
}

TEST_CASE("report schema") {
  std::vector<Check> checks = {
      {"b.fail", "b", "", [](const CheckContext&) { return CheckOutcome::fail("no"); }},
      {"a.pass", "a", "", [](const CheckContext& ctx) { return CheckOutcome::pass(std::to_string(ctx.count(3))); }},
      {"c.erratum", "c", "", [](const CheckContext&) { return CheckOutcome::erratum("documented"); }},
      {"d.throws", "d", "", [](const CheckContext&) -> CheckOutcome { throw std::runtime_error("boom"); }},
  };
  auto report = run_checks(checks, 5, 10, "unit");
  REQUIRE(report.checks.size() == 4);
  CHECK(report.checks[0].name == "a.pass");
  CHECK(report.checks[0].detail == "10");
  CHECK(report.checks[3].status == CheckStatus::Fail);
  CHECK(report.passed() == 2);
  CHECK(report.failed() == 2);
  std::string s = report_to_string(report);
  CHECK(s.back() == '\n');
  CHECK(std::count(s.begin(), s.end(), '\n') == 1);
  auto j = nlohmann::json::parse(s);
  CHECK(j["suite"] == "unit");
  CHECK(j["seed"] == 5);
  CHECK(j["summary"]["passed"] == 2);
  CHECK(j["checks"][2]["status"] == "erratum-documented");
  CHECK(j.contains("tool_version"));
  // Keys appear in sorted order.
  CHECK(s.find("\"checks\"") < s.find("\"seed\""));
  CHECK(s.find("\"seed\"") < s.find("\"suite\""));
  CHECK(s.find("\"summary\"") < s.find("\"tool_version\""));
}

TEST_CASE("empty suite") {
  auto report = run_checks({}, 1, 1, "empty");
  auto j = nlohmann::json::parse(report_to_string(report));
  CHECK(j["checks"].is_array());
  CHECK(j["checks"].empty());
  CHECK(j["summary"]["passed"] == 0);
  CHECK(j["summary"]["failed"] == 0);
}

TEST_CASE("default suite passes and is deterministic") {
  auto a = run_default_suite(42, 20);
  auto b = run_default_suite(42, 20);
  CHECK(a.failed() == 0);
  CHECK(report_to_string(a) == report_to_string(b));
  int errata = 0;
  for (const auto& c : a.checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.status != CheckStatus::Fail);
    if (c.status == CheckStatus::ErratumDocumented) ++errata;
  }
  CHECK(errata == 4);
}

TEST_CASE("status names") {
  CHECK(status_name(CheckStatus::Pass) == "pass");
  CHECK(status_name(CheckStatus::Fail) == "fail");
  CHECK(status_name(CheckStatus::ErratumDocumented) == "erratum-documented");
}
