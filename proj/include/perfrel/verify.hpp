#pragma once

// The built-in verification suite: every catalog instance, the relation-
// space dimensions, the formal-engine identities, the classification
// labels, and the bulk property checks, as named pass/fail results with a
// machine-readable report.

#include <string>
#include <vector>

namespace perfrel {

struct CheckResult {
  int criterion = 0;       // 1..10, grouping for the acceptance report
  std::string name;        // stable check identifier
  std::vector<std::string> tags;
  bool pass = false;
  std::string expected;
  std::string actual;
};

// Run all checks (or only those carrying `only_tag` when nonempty).
// Deterministic order and content.
std::vector<CheckResult> run_verify_paper(const std::string& only_tag = "");

// Aggregated one-line-per-criterion summary; returns true iff all pass.
bool print_criterion_summary(const std::vector<CheckResult>& results);

std::string results_to_json(const std::vector<CheckResult>& results);

}  // namespace perfrel
