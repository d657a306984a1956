// Acceptance suite: runs every verification check and prints one pass/fail
// line per criterion, then the individual check results. Exit status 0 iff
// everything passes.

#include <cstdio>

#include "perfrel/verify.hpp"

int main() {
  const auto results = perfrel::run_verify_paper();
  const bool ok = perfrel::print_criterion_summary(results);
  std::printf("%s\n", ok ? "ACCEPTANCE: all criteria pass"
                         : "ACCEPTANCE: FAILURES present");
  return ok ? 0 : 1;
}
