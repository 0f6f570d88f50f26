// Acceptance runner: one PASS/FAIL line per criterion, followed by the
// failing claims of that criterion. A criterion that exceeds its time limit
// fails even when all of its claims hold.
//
// Usage: acceptance [cache-dir]

#include <cstdio>
#include <iostream>

#include "glgu/verify.hpp"

int main(int argc, char** argv) {
  glgu::cache::Store store(glgu::cache::resolve_dir(argc > 1 ? argv[1] : ""));
  glgu::Context ctx(store, glgu::kDefaultBudget, 0x5EED);
  const auto suite = glgu::acceptance_suite(ctx);

  int passed = 0;
  for (const auto& c : suite) {
    const bool in_time = c.seconds <= c.limit_seconds;
    const bool ok = c.pass() && in_time;
    passed += ok;
    char timing[96];
    std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", c.seconds, c.limit_seconds);
    std::cout << (ok ? "PASS " : "FAIL ") << c.id << ": " << c.title << " [" << c.claims.size() << " claims, "
              << timing << "]\n";
    if (!in_time) std::cout << "    over time limit\n";
    for (const auto& claim : c.claims)
      if (!claim.pass) std::cout << "    " << glgu::claim_line(claim) << "\n";
  }
  for (const auto& w : store.warnings()) std::cout << "warning: " << w << "\n";
  std::cout << "SUMMARY " << passed << "/" << suite.size() << " criteria pass\n";
  return passed == static_cast<int>(suite.size()) ? 0 : 1;
}
