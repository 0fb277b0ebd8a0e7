#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circlab/limits.hpp"
#include "circlab/serialize.hpp"

namespace circlab {

enum class CheckStatus { pass, fail, skip, exhausted };
std::string_view to_string(CheckStatus status);

struct CheckResult {
  std::string name;
  Json params = Json::object();
  CheckStatus status = CheckStatus::skip;
  Json lhs;
  Json rhs;
  Json witness;
  /// Why a SKIP was skipped, what a FAIL violated, or budget data.
  std::string note;
  std::uint64_t elapsed_ms = 0;
};

enum class Profile { quick, full };
std::string_view to_string(Profile profile);
std::optional<Profile> parse_profile(std::string_view text);

struct ProfileConfig {
  /// Largest input graph a check instance may use.
  std::size_t max_vertices;
  /// Largest graph on which phi or phi^a_b is computed exactly.
  std::size_t max_phi_vertices;
  /// Largest Mycielski iteration.
  std::size_t max_t;
  SearchLimits limits;
};
ProfileConfig profile_config(Profile profile);

struct CheckInfo {
  std::string_view name;
  std::string_view claim;
};
/// Registered checks in report order.
const std::vector<CheckInfo>& registered_checks();
bool is_registered(std::string_view name);

/// Parameter sets a profile runs for one check.
std::vector<Json> check_instances(std::string_view name, Profile profile);

/// Runs one check instance. Throws std::invalid_argument for an unknown name
/// or malformed parameters.
/// `node_budget` overrides the profile's per-search budget.
CheckResult run_check(std::string_view name, const Json& params, Profile profile = Profile::quick,
                      std::optional<std::uint64_t> node_budget = std::nullopt);

struct Summary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skip = 0;
  std::size_t exhausted = 0;
};

struct Report {
  Profile profile = Profile::quick;
  std::vector<CheckResult> results;
  Summary summary;
};

inline constexpr std::string_view kSuiteVersion = "1.0";

/// Every instance of the named checks (all when `only` is empty), in registry
/// then instance order. Values computed once are shared across checks.
Report run_all(Profile profile, const std::vector<std::string>& only = {},
               std::optional<std::uint64_t> node_budget = std::nullopt);

/// {suite_version, profile, results, summary}. elapsed_ms is included only
/// when `timing` is set, so default reports are byte-identical across runs.
Json to_json(const CheckResult& result, bool timing = false);
Json to_json(const Report& report, bool timing = false);

}  // namespace circlab
