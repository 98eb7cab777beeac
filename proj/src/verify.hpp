#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace feld {

struct verify_failure {
  std::string name;
  std::string detail;
};

struct verify_group {
  std::string id;
  std::string title;
  double budget_seconds = 0;
  long cases = 0;
  long passed = 0;
  std::vector<verify_failure> failures;
  std::vector<std::string> notes;  // recorded values and relation reports, as JSON text

  bool ok() const { return passed == cases; }
};

struct verify_report {
  std::string suite;
  std::uint64_t seed = 0;
  int groups = 0;
  long cases = 0;
  long passed = 0;
  bool all_passed = false;
  std::vector<verify_group> results;
};

// The fixed identifiers of the verification groups, in running order.
const std::vector<std::string>& verify_group_ids();

// Per-group wall-time budgets enforced by the acceptance runner, seconds.
double verify_group_budget(const std::string& id);

// Runs the named group ("c01".."c15") or every group ("all"). The seed feeds
// the randomized relation checks only; all other cases are exact symbolic
// identities.
verify_report run_verify(const std::string& suite, std::uint64_t seed);

// Deterministic JSON rendering (no wall times).
std::string verify_report_to_json(const verify_report& report);

}  // namespace feld
