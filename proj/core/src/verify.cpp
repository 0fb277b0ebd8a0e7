#include "circlab/verify.hpp"

#include <algorithm>
#include <chrono>

#include "circlab/free_constructions.hpp"
#include "verify_internal.hpp"

namespace circlab {

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skip: return "SKIP";
    case CheckStatus::exhausted: return "EXHAUSTED";
  }
  return "?";
}

std::string_view to_string(Profile profile) {
  return profile == Profile::quick ? "quick" : "full";
}

std::optional<Profile> parse_profile(std::string_view text) {
  if (text == "quick") return Profile::quick;
  if (text == "full") return Profile::full;
  return std::nullopt;
}

ProfileConfig profile_config(Profile profile) {
  if (profile == Profile::quick) return ProfileConfig{12, 12, 1, SearchLimits{64, 50'000'000}};
  return ProfileConfig{45, 15, 2, SearchLimits{64, 400'000'000}};
}

namespace detail {

std::string tower_name(const std::string& base, std::size_t t) {
  if (t == 0) return base;
  return (t == 1 ? std::string("M(") : "M^" + std::to_string(t) + "(") + base + ")";
}

const Graph& Memo::graph(const std::string& name) {
  auto it = graphs_.find(name);
  if (it == graphs_.end()) it = graphs_.emplace(name, build_family(name)).first;
  return it->second;
}

const MycielskiGraph& Memo::tower(const std::string& base, std::size_t t) {
  auto key = std::make_pair(base, t);
  auto it = towers_.find(key);
  if (it == towers_.end()) {
    auto mg = std::make_unique<MycielskiGraph>(iterated_mycielskian(graph(base), t));
    graphs_.emplace(tower_name(base, t), mg->graph());
    it = towers_.emplace(key, std::move(mg)).first;
  }
  return *it->second;
}

namespace {

template <class Map, class Key, class Fn>
const typename Map::mapped_type& cached(Map& map, const Key& key, Fn&& compute) {
  auto it = map.find(key);
  if (it == map.end()) it = map.emplace(key, compute()).first;
  return it->second;
}

}  // namespace

std::size_t Memo::chi(const std::string& name) {
  return cached(chi_, name, [&] { return chromatic_number(graph(name), limits()).value; });
}

std::size_t Memo::omega(const std::string& name) {
  return cached(omega_, name, [&] { return clique_number(graph(name), limits()); });
}

std::size_t Memo::alpha(const std::string& name) {
  return cached(alpha_, name, [&] { return independence_number(graph(name), limits()); });
}

std::size_t Memo::alpha_bar(const std::string& name) {
  return cached(alpha_bar_, name, [&] { return max_free_size(graph(name), limits()); });
}

const CircularChromaticNumber& Memo::chi_c(const std::string& name) {
  return cached(chi_c_, name, [&] {
    auto cc = circular_chromatic_number(graph(name), limits());
    chi_.emplace(name, cc.chromatic);
    return cc;
  });
}

const FreeChromatic& Memo::phi(const std::string& name) {
  return cached(phi_, name, [&] { return free_chromatic_number(graph(name), limits()); });
}

const FreeChromatic& Memo::phi_ab(const std::string& name, std::size_t a, std::size_t b) {
  return cached(phi_ab_, std::make_tuple(name, a, b),
                [&] { return ab_free_chromatic_number(graph(name), a, b, limits()); });
}

}  // namespace detail

const std::vector<CheckInfo>& registered_checks() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const auto& entry : detail::check_table()) out.push_back(entry.info);
    return out;
  }();
  return infos;
}

bool is_registered(std::string_view name) {
  const auto& checks = registered_checks();
  return std::any_of(checks.begin(), checks.end(),
                     [&](const CheckInfo& c) { return c.name == name; });
}

namespace {

const detail::CheckEntry& find_entry(std::string_view name) {
  for (const auto& entry : detail::check_table()) {
    if (entry.info.name == name) return entry;
  }
  throw std::invalid_argument("unknown check '" + std::string(name) + "'");
}

CheckResult execute(const detail::CheckEntry& entry, const Json& params, detail::Memo& memo) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult result;
  try {
    result = entry.run(params, memo);
  } catch (const detail::Inapplicable& skip) {
    result.status = CheckStatus::skip;
    result.note = skip.reason;
  } catch (const BudgetExhausted& e) {
    result.status = CheckStatus::exhausted;
    result.note = e.what();
  } catch (const ConstructionFailure& e) {
    result.status = CheckStatus::fail;
    result.note = e.what();
    result.witness = Json{{"coloring", to_json(e.coloring())}, {"problems", e.problems()}};
  } catch (const std::length_error& e) {
    result.status = CheckStatus::skip;
    result.note = e.what();
  }
  result.name = std::string(entry.info.name);
  result.params = params;
  result.elapsed_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
          .count());
  return result;
}

void tally(Summary& summary, CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: ++summary.pass; break;
    case CheckStatus::fail: ++summary.fail; break;
    case CheckStatus::skip: ++summary.skip; break;
    case CheckStatus::exhausted: ++summary.exhausted; break;
  }
}

ProfileConfig configured(Profile profile, std::optional<std::uint64_t> node_budget) {
  ProfileConfig config = profile_config(profile);
  if (node_budget) config.limits.node_budget = *node_budget;
  return config;
}

}  // namespace

std::vector<Json> check_instances(std::string_view name, Profile profile) {
  return find_entry(name).instances(profile);
}

CheckResult run_check(std::string_view name, const Json& params, Profile profile,
                      std::optional<std::uint64_t> node_budget) {
  const auto& entry = find_entry(name);
  detail::Memo memo(configured(profile, node_budget));
  try {
    return execute(entry, params, memo);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("check " + std::string(name) + ": bad parameters: " + e.what());
  }
}

Report run_all(Profile profile, const std::vector<std::string>& only,
               std::optional<std::uint64_t> node_budget) {
  Report report;
  report.profile = profile;
  detail::Memo memo(configured(profile, node_budget));
  for (const auto& entry : detail::check_table()) {
    if (!only.empty() && std::find(only.begin(), only.end(), entry.info.name) == only.end()) {
      continue;
    }
    for (const Json& params : entry.instances(profile)) {
      report.results.push_back(execute(entry, params, memo));
      tally(report.summary, report.results.back().status);
    }
  }
  return report;
}

Json to_json(const CheckResult& result, bool timing) {
  Json out{{"name", result.name},
           {"params", result.params},
           {"status", std::string(to_string(result.status))},
           {"lhs", result.lhs},
           {"rhs", result.rhs}};
  if (!result.witness.is_null()) out["witness"] = result.witness;
  if (!result.note.empty()) out["note"] = result.note;
  if (timing) out["elapsed_ms"] = result.elapsed_ms;
  return out;
}

Json to_json(const Report& report, bool timing) {
  Json results = Json::array();
  for (const auto& r : report.results) results.push_back(to_json(r, timing));
  return Json{{"suite_version", std::string(kSuiteVersion)},
              {"profile", std::string(to_string(report.profile))},
              {"results", results},
              {"summary",
               {{"pass", report.summary.pass},
                {"fail", report.summary.fail},
                {"skip", report.summary.skip},
                {"exhausted", report.summary.exhausted}}}};
}

}  // namespace circlab
