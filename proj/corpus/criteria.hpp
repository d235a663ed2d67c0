#pragma once

#include <functional>
#include <string>
#include <vector>

namespace slopelab::corpus {

struct CriterionResult {
  bool passed = false;
  std::string expected;
  std::string computed;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  std::vector<std::string> tags;
  std::function<CriterionResult()> run;

  /// Empty filter, or a substring of the name or of some tag.
  bool matches(const std::string& filter) const;
};

/// The acceptance suite.  With inject_failure the first criterion compares
/// against a deliberately wrong expected value (negative control).
std::vector<Criterion> acceptance_criteria(bool inject_failure = false);

}  // namespace slopelab::corpus
