#pragma once

#include <string>
#include <string_view>
#include <utility>

namespace twoadic {

enum class Verdict { holds, hypothesis_not_met, paper_exception, counterexample };

std::string_view to_string(Verdict v);

/// Outcome of one claim check. observed/expected are filled only when the
/// verdict is paper_exception or counterexample.
struct CheckResult {
  Verdict verdict = Verdict::holds;
  std::string observed;
  std::string expected;

  static CheckResult holds() { return {Verdict::holds, {}, {}}; }
  static CheckResult not_applicable() { return {Verdict::hypothesis_not_met, {}, {}}; }
  static CheckResult violation(Verdict v, std::string observed, std::string expected) {
    return {v, std::move(observed), std::move(expected)};
  }
};

}  // namespace twoadic
