// Runs every suite once and prints one line per acceptance criterion.
// Exit status 1 when any criterion fails.
#include <cstdlib>
#include <iostream>
#include <map>

#include "supergrass/suites.hpp"

int main(int argc, char** argv) {
  sg::SuiteOptions opts;
  opts.seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;
  const auto rep = sg::run_suite("all", opts);

  std::map<unsigned, std::vector<const sg::CheckResult*>> by_criterion;
  for (const auto& c : rep.checks) by_criterion[c.criterion].push_back(&c);

  bool ok = true;
  for (unsigned n = 1; n <= 9; ++n) {
    const auto& rows = by_criterion[n];
    bool pass = !rows.empty();
    for (const auto* c : rows) pass = pass && c->status != sg::Status::Fail;
    ok = ok && pass;
    std::cout << "criterion " << n << ": " << (pass ? "PASS" : "FAIL") << " (" << rows.size() << " checks)\n";
    for (const auto* c : rows)
      if (c->status != sg::Status::Pass)
        std::cout << "  " << sg::status_name(c->status) << " " << c->id << ": " << c->anchor << "\n    " << c->detail
                  << "\n";
  }
  std::cout << "seed " << opts.seed << ", " << rep.checks.size() << " checks\n";
  return ok ? 0 : 1;
}
