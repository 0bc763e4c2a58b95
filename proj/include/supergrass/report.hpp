// Verification reports: one row per check, sorted by id.
#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace sg {

/// Note marks an informational finding that does not fail the suite.
enum class Status { Pass, Fail, Note };
std::string status_name(Status s);

struct CheckResult {
  std::string id;
  /// Acceptance criterion (1-9) the check belongs to.
  unsigned criterion = 0;
  /// The identity under test, in plain notation.
  std::string anchor;
  Status status = Status::Pass;
  /// Counterexample (DSL text where possible) for failures, explanation for notes.
  std::string detail;
  double seconds = 0;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  unsigned cases = 0;
  std::vector<CheckResult> checks;
  double seconds = 0;

  bool passed() const;
  unsigned count(Status s) const;
  /// Timings are left out unless requested so that equal seeds give equal bytes.
  nlohmann::json to_json(bool timing = false) const;
  std::string to_text(bool timing = false) const;
};

}  // namespace sg
