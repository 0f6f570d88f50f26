// glgu: batch front end for the census, involution, classification and
// character-table commands and the full acceptance suite.
//
// Exit status: 0 all claims pass, 1 some claim failed, 2 budget refusal,
// 3 I/O or cache failure, 4 invalid configuration. CLI11 reports usage errors.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "glgu/cache.hpp"
#include "glgu/verify.hpp"

namespace {

enum Exit { kPass = 0, kFalsified = 1, kBudget = 2, kIo = 3, kConfig = 4 };

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real classes, indicators and character tables of GL2 / GU2 over truncated DVRs"};
  glgu::RunConfig cfg;
  std::string kind = "gl2", family = "mixed", out;

  app.add_option("--kind", kind, "gl2 or gu2")->check(CLI::IsMember({"gl2", "gu2"}));
  app.add_option("--p", cfg.p, "odd residue characteristic");
  app.add_option("--f", cfg.f, "residue degree, q = p^f (f > 1 needs --family equal)");
  app.add_option("--ell", cfg.ell, "truncation level");
  app.add_option("--family", family, "mixed (Z/p^l) or equal (F_q[t]/t^l)")
      ->check(CLI::IsMember({"mixed", "equal"}));
  app.add_option("--command", cfg.command, "census | involutions | chartab | classify | verify-all")
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(glgu::kCommands), std::end(glgu::kCommands))));
  app.add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--cache-dir", cfg.cache_dir, std::string("cache directory (default $") + glgu::cache::kEnvVar + ")");
  app.add_option("--budget", cfg.budget, "bound on enumerated elements and class-algebra entries");
  app.add_option("--seed", cfg.seed, "seed for eigenspace splitting and sampling");
  app.add_option("--out", out, "write the report here instead of stdout");
  app.add_flag("--timing", cfg.timing, "include wall-clock phase timings in the report");
  app.add_flag("--long", cfg.long_running, "allow tangibility at l = 3");
  CLI11_PARSE(app, argc, argv);

  try {
    cfg.kind = glgu::parse_kind(kind);
    cfg.family = glgu::parse_family(family);
    (void)glgu::group_ring(cfg.spec());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  }

  glgu::Report report;
  try {
    report = glgu::run_command(cfg);
  } catch (const glgu::BudgetExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kBudget;
  } catch (const glgu::cache::CacheError& e) {
    std::cerr << "cache error: " << e.what() << "\n";
    return kIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  }

  for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
  if (cfg.command == "verify-all")
    for (const auto& c : report.claims) std::cerr << glgu::claim_line(c) << "\n";

  const std::string text = cfg.format == "csv" ? glgu::to_csv(report) : glgu::to_json(report);
  if (out.empty()) {
    std::cout << text << std::flush;
  } else {
    std::ofstream os(out, std::ios::trunc);
    if (!(os << text)) {
      std::cerr << "i/o error: cannot write " << out << "\n";
      return kIo;
    }
  }
  return report.all_pass() ? kPass : kFalsified;
}
