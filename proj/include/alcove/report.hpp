#pragma once

#include <string>
#include <vector>

namespace alcove {

// Structured verification result: one named check per assertion, with a
// counterexample payload on failure.
struct Check {
  std::string name;
  bool passed = false;
  std::string counterexample;  // empty when passed
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  void add(std::string name, bool passed, std::string counterexample = "") {
    checks.push_back({std::move(name), passed, passed ? "" : std::move(counterexample)});
  }
  bool ok() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  std::string first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return c.name + ": " + c.counterexample;
    return "";
  }
};

}  // namespace alcove
