#include "glgu/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace glgu {

Claim make_claim(std::string id, std::string statement, ordered_json expected, ordered_json computed) {
  Claim c{std::move(id), std::move(statement), std::move(expected), std::move(computed), false};
  c.pass = c.expected == c.computed;
  return c;
}

bool Report::all_pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

ordered_json config_json(const RunConfig& cfg) {
  ordered_json j;
  j["kind"] = std::string(to_string(cfg.kind));
  j["p"] = cfg.p;
  j["f"] = cfg.f;
  j["ell"] = cfg.ell;
  j["family"] = std::string(to_string(cfg.family));
  j["command"] = cfg.command;
  j["outputFormat"] = cfg.format;
  j["budget"] = cfg.budget;
  j["seed"] = cfg.seed;
  j["longRunning"] = cfg.long_running;
  return j;
}

std::string to_json(const Report& r) {
  ordered_json j;
  j["config"] = config_json(r.config);
  j["claims"] = ordered_json::array();
  for (const auto& c : r.claims)
    j["claims"].push_back(
        {{"id", c.id}, {"paperRef", c.statement}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
  j["result"] = r.result;
  j["warnings"] = r.warnings;
  if (r.config.timing) {
    ordered_json t = ordered_json::object();
    for (const auto& [phase, seconds] : r.timing) t[phase] = seconds;
    j["timing"] = t;
  } else {
    j["timing"] = nullptr;
  }
  return j.dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv(const Report& r) {
  std::ostringstream os;
  os << "id,paperRef,expected,computed,pass\n";
  for (const auto& c : r.claims)
    os << csv_field(c.id) << ',' << csv_field(c.statement) << ',' << csv_field(c.expected.dump()) << ','
       << csv_field(c.computed.dump()) << ',' << (c.pass ? "true" : "false") << '\n';
  return os.str();
}

std::string claim_line(const Claim& c) {
  return std::string(c.pass ? "PASS " : "FAIL ") + c.id + ": expected=" + c.expected.dump() +
         " computed=" + c.computed.dump();
}

}  // namespace glgu
