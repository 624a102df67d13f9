#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace sympcliff {

enum class CheckStatus { Pass, Fail, ErratumDocumented };

/// "pass", "fail", "erratum-documented".
std::string status_name(CheckStatus s);

struct CheckOutcome {
  CheckStatus status;
  std::string detail;

  static CheckOutcome pass(std::string detail) { return {CheckStatus::Pass, std::move(detail)}; }
  static CheckOutcome fail(std::string detail) { return {CheckStatus::Fail, std::move(detail)}; }
  static CheckOutcome erratum(std::string detail) { return {CheckStatus::ErratumDocumented, std::move(detail)}; }
};

struct CheckContext {
  std::uint64_t seed;
  /// Random cases per randomized check; a check never runs fewer than its
  /// own floor (e.g. 1000 for the field axioms).
  int cases;
  std::string name;

  int count(int floor) const { return cases > floor ? cases : floor; }
};

struct Check {
  std::string name;    // "<module>.<property>", unique
  std::string module;  // one of the ten module names
  std::string description;
  std::function<CheckOutcome(const CheckContext&)> run;
};

/// The default suite, sorted by name.
const std::vector<Check>& default_checks();

/// Property of a module that the default suite must cover, and the check
/// covering it.
struct RequiredInvariant {
  std::string module;
  std::string property;
  std::string check;
};
const std::vector<RequiredInvariant>& required_invariants();

/// Names in required_invariants() with no registered check.
std::vector<std::string> missing_coverage(const std::vector<Check>& checks);

struct CheckResult {
  std::string name;
  CheckStatus status;
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;  // sorted by name
  std::uint64_t seed = 0;
  std::string tool_version;

  /// Erratum-documented checks count as passed.
  int passed() const;
  int failed() const;
};

inline constexpr int kDefaultCases = 500;

/// Runs `checks` (in parallel) and returns the results sorted by name. A
/// check that throws is recorded as failed.
VerificationReport run_checks(const std::vector<Check>& checks, std::uint64_t seed, int cases,
                              const std::string& suite = "default");
VerificationReport run_default_suite(std::uint64_t seed, int cases = kDefaultCases);

nlohmann::json report_to_json(const VerificationReport& report);
/// Compact JSON with sorted keys followed by one LF.
std::string report_to_string(const VerificationReport& report);
/// Writes report_to_string; throws Error naming the path on I/O failure.
void emit_report(const VerificationReport& report, const std::string& path);

std::string tool_version();

}  // namespace sympcliff
