#include "supergrass/report.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <sstream>

namespace sg {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Note:
      return "note";
  }
  return "?";
}

bool SuiteReport::passed() const { return count(Status::Fail) == 0; }

unsigned SuiteReport::count(Status s) const {
  return static_cast<unsigned>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
}

nlohmann::json SuiteReport::to_json(bool timing) const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json r = {{"id", c.id}, {"criterion", c.criterion}, {"anchor", c.anchor}, {"status", status_name(c.status)}};
    if (c.status == Status::Fail) r["counterexample"] = c.detail;
    if (c.status == Status::Note) r["note"] = c.detail;
    if (timing) r["seconds"] = c.seconds;
    rows.push_back(std::move(r));
  }
  nlohmann::json j = {{"suite", suite},
                      {"seed", seed},
                      {"cases", cases},
                      {"passed", count(Status::Pass)},
                      {"failed", count(Status::Fail)},
                      {"notes", count(Status::Note)},
                      {"checks", std::move(rows)}};
  if (timing) j["wall_seconds"] = seconds;
  return j;
}

std::string SuiteReport::to_text(bool timing) const {
  std::ostringstream os;
  for (const auto& c : checks) {
    std::string tag = status_name(c.status);
    std::transform(tag.begin(), tag.end(), tag.begin(), [](unsigned char ch) { return std::toupper(ch); });
    os << std::left << std::setw(6) << tag << c.id;
    if (timing) os << "  (" << std::fixed << std::setprecision(3) << c.seconds << " s)";
    os << "\n";
    if (c.status != Status::Pass) os << "      " << c.anchor << "\n      " << c.detail << "\n";
  }
  os << suite << ": " << count(Status::Pass) << " passed, " << count(Status::Fail) << " failed, "
     << count(Status::Note) << " notes (seed " << seed << ", cases " << cases << ")";
  if (timing) os << " in " << std::fixed << std::setprecision(3) << seconds << " s";
  os << "\n";
  return os.str();
}

}  // namespace sg
