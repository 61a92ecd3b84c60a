#pragma once

#include <string>
#include <vector>

// Executable versions of the results the library reproduces. The CLI's
// `paper-check` and the acceptance test binary both run these.
namespace subshift::claims {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CriterionResult {
  int number = 0;
  std::string group;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0.0;
  double time_limit = 0.0;
  bool within_time() const noexcept { return seconds <= time_limit; }
  bool passed() const noexcept;
};

/// Group names in criterion order: sturmian, sturmian-aut, acb, hedlund,
/// bounds, cassaigne, oracle, thue-morse.
std::vector<std::string> groups();

/// Throws DomainError for an unknown group.
CriterionResult run(const std::string& group);

/// Runs the given groups (all when empty) in criterion order.
std::vector<CriterionResult> run_all(const std::vector<std::string>& only = {});

}  // namespace subshift::claims
