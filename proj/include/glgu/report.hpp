#pragma once

// Run configuration, checked claims and their JSON / CSV serialization.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "glgu/group.hpp"

namespace glgu {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kCommands[] = {"census", "involutions", "chartab", "classify", "verify-all"};

struct RunConfig {
  GroupKind kind = GroupKind::GL2;
  unsigned p = 3;
  unsigned f = 1;
  unsigned ell = 1;
  Family family = Family::Mixed;
  std::string command = "census";
  std::string format = "json";
  std::string cache_dir;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 0x5EED;
  bool timing = false;
  bool long_running = false;  // tangibility at l = 3

  GroupSpec spec() const { return GroupSpec{kind, family, p, f, ell}; }
};

/// One checked statement. `expected` comes from a closed form or a stated
/// value, `computed` from enumeration.
struct Claim {
  std::string id;
  std::string statement;
  ordered_json expected;
  ordered_json computed;
  bool pass = false;
};

Claim make_claim(std::string id, std::string statement, ordered_json expected, ordered_json computed);

struct Report {
  RunConfig config;
  std::vector<Claim> claims;
  ordered_json result = ordered_json::object();
  std::vector<std::string> warnings;
  std::vector<std::pair<std::string, double>> timing;

  bool all_pass() const;
};

ordered_json config_json(const RunConfig& cfg);
/// {config, claims, result, warnings, timing}; timing is null unless cfg.timing.
std::string to_json(const Report& r);
/// One row per claim: id,paperRef,expected,computed,pass.
std::string to_csv(const Report& r);
/// "PASS id: expected=... computed=..." lines.
std::string claim_line(const Claim& c);

}  // namespace glgu
