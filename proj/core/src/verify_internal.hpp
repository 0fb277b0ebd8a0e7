#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>

#include "circlab/chromatic.hpp"
#include "circlab/families.hpp"
#include "circlab/free_chromatic.hpp"
#include "circlab/verify.hpp"

namespace circlab::detail {

/// Per-run cache of graphs and invariants, keyed by graph display name.
class Memo {
 public:
  explicit Memo(ProfileConfig config) : config_(config) {}

  const ProfileConfig& config() const noexcept { return config_; }
  const SearchLimits& limits() const noexcept { return config_.limits; }

  const Graph& graph(const std::string& name);
  /// M^t of a named graph, with its tower bookkeeping.
  const MycielskiGraph& tower(const std::string& base, std::size_t t);

  std::size_t chi(const std::string& name);
  std::size_t omega(const std::string& name);
  std::size_t alpha(const std::string& name);
  std::size_t alpha_bar(const std::string& name);
  const CircularChromaticNumber& chi_c(const std::string& name);
  const FreeChromatic& phi(const std::string& name);
  const FreeChromatic& phi_ab(const std::string& name, std::size_t a, std::size_t b);

 private:
  ProfileConfig config_;
  std::map<std::string, Graph> graphs_;
  std::map<std::pair<std::string, std::size_t>, std::unique_ptr<MycielskiGraph>> towers_;
  std::map<std::string, std::size_t> chi_, omega_, alpha_, alpha_bar_;
  std::map<std::string, CircularChromaticNumber> chi_c_;
  std::map<std::string, FreeChromatic> phi_;
  std::map<std::tuple<std::string, std::size_t, std::size_t>, FreeChromatic> phi_ab_;
};

/// "M(G)" or "M^t(G)"; G itself for t = 0.
std::string tower_name(const std::string& base, std::size_t t);

using CheckFn = CheckResult (*)(const Json& params, Memo& memo);
using InstanceFn = std::vector<Json> (*)(Profile profile);

struct CheckEntry {
  CheckInfo info;
  CheckFn run;
  InstanceFn instances;
};

const std::vector<CheckEntry>& check_table();

/// Thrown by a check whose precondition does not hold; becomes SKIP.
struct Inapplicable {
  std::string reason;
};

}  // namespace circlab::detail
